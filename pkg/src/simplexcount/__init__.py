"""Exact point counts over finite fields for hypersurfaces whose Newton
polytope is a unimodular image of the standard simplex.

The pipeline: parse a polynomial, decide whether its support is an affine
unimodular image of the standard simplex vertex set (with an explicit witness
map), assemble the closed-form count polynomial in q, and check it against
brute-force enumeration over small fields.
"""

from .lattice import (
    AffineUnimodularMap,
    EquivalenceVerdict,
    IntMatrix,
    IntVector,
    NON_UNIT_INVARIANT_FACTOR,
    SimplexWitness,
    SNFResult,
    SupportSet,
    WRONG_RANK,
    WRONG_SUPPORT_SIZE,
    affine_dim,
    apply_affine_map,
    bezout_vector,
    det,
    simplex_equivalence,
    smith_normal_form,
    standard_simplex,
    unimodular_completion,
)
from .poly import (
    Exponent,
    MultiPoly,
    PolyParseError,
    parse_polynomial,
    specialize,
    support,
)
from .formula import (
    BadPrimeReport,
    CountPolynomial,
    DEFAULT_SUBSET_CAP,
    FDeltaTable,
    NotApplicableError,
    SubsetCapError,
    UnsupportedFaceError,
    affine_count_poly,
    bad_primes,
    f_delta,
    mobius_identity_check,
    torus_count_poly,
    torus_share_poly,
)
from .ffield import (
    FIELD_SIZE_BOUND,
    Field,
    PrimePower,
    as_prime_power,
    default_modulus,
    enumerate_prime_powers,
    evaluate_poly,
    is_prime,
    make_field,
)
from .oracle import (
    CurveUnionCounts,
    DEFAULT_WORK_CAP,
    DegenerateCubicError,
    Region,
    StratifiedCount,
    VerificationReport,
    VerificationRow,
    WorkCapError,
    brute_force_count,
    cubic_discriminant,
    curve_and_complement_polys,
    curve_union_counts,
    stratified_count,
    verify_formula,
)
from .fixtures import (
    build_fixture,
    default_cubic,
    diagonal,
    fourfold,
    koras_russell,
    russell,
)

__version__ = "0.1.0"

__all__ = [
    "AffineUnimodularMap",
    "BadPrimeReport",
    "CountPolynomial",
    "CurveUnionCounts",
    "DEFAULT_SUBSET_CAP",
    "DEFAULT_WORK_CAP",
    "DegenerateCubicError",
    "EquivalenceVerdict",
    "Exponent",
    "FDeltaTable",
    "FIELD_SIZE_BOUND",
    "Field",
    "IntMatrix",
    "IntVector",
    "MultiPoly",
    "NON_UNIT_INVARIANT_FACTOR",
    "NotApplicableError",
    "PolyParseError",
    "PrimePower",
    "Region",
    "SNFResult",
    "SimplexWitness",
    "StratifiedCount",
    "SubsetCapError",
    "SupportSet",
    "UnsupportedFaceError",
    "VerificationReport",
    "VerificationRow",
    "WRONG_RANK",
    "WRONG_SUPPORT_SIZE",
    "WorkCapError",
    "affine_count_poly",
    "affine_dim",
    "apply_affine_map",
    "as_prime_power",
    "bad_primes",
    "bezout_vector",
    "brute_force_count",
    "build_fixture",
    "cubic_discriminant",
    "curve_and_complement_polys",
    "curve_union_counts",
    "default_cubic",
    "default_modulus",
    "det",
    "diagonal",
    "enumerate_prime_powers",
    "evaluate_poly",
    "f_delta",
    "fourfold",
    "is_prime",
    "koras_russell",
    "make_field",
    "mobius_identity_check",
    "parse_polynomial",
    "russell",
    "simplex_equivalence",
    "smith_normal_form",
    "specialize",
    "standard_simplex",
    "stratified_count",
    "support",
    "torus_count_poly",
    "torus_share_poly",
    "unimodular_completion",
    "verify_formula",
]

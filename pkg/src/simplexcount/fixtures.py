"""Named example polynomials with known closed-form counts.

These are the classical test inputs: hypersurfaces whose supports are
unimodular simplices and whose affine zero counts collapse to a single power
of q.
"""

from __future__ import annotations

import math

from .poly import MultiPoly, parse_polynomial


def russell() -> MultiPoly:
    """The Russell cubic threefold x^2*y + x + z^2 + t^3 in 4-space.

    Its affine zero count over F_q is exactly q^3 for every prime power q.
    """
    return parse_polynomial("x^2*y + x + z^2 + t^3", vars=("x", "y", "z", "t"))


def fourfold() -> MultiPoly:
    """A 4-dimensional analogue, x + x^2*y + z^2 + t^3 + u^5; count q^4."""
    return parse_polynomial("x + x^2*y + z^2 + t^3 + u^5", vars=("x", "y", "z", "t", "u"))


def _check_pairwise_coprime(exponents: tuple[int, ...]):
    if not exponents:
        raise ValueError("need at least one exponent")
    for n in exponents:
        if n < 1:
            raise ValueError(f"exponents must be positive, got {n}")
    for i in range(len(exponents)):
        for j in range(i + 1, len(exponents)):
            if math.gcd(exponents[i], exponents[j]) != 1:
                raise ValueError(
                    f"exponents must be pairwise coprime: "
                    f"gcd({exponents[i]}, {exponents[j]}) > 1"
                )


def diagonal(*exponents: int) -> MultiPoly:
    """x1^n1 + ... + xr^nr with pairwise coprime exponents; count q^(r-1)."""
    _check_pairwise_coprime(exponents)
    names = tuple(f"x{i + 1}" for i in range(len(exponents)))
    terms = {
        tuple(n if j == i else 0 for j in range(len(exponents))): 1
        for i, n in enumerate(exponents)
    }
    return MultiPoly(names, terms)


def koras_russell(*exponents: int) -> MultiPoly:
    """x^2*y + x + x1^n1 + ... + xr^nr with pairwise coprime exponents.

    These live in (r+2)-space and have affine zero count q^(r+1).
    """
    _check_pairwise_coprime(exponents)
    r = len(exponents)
    names = ("x", "y") + tuple(f"x{i + 1}" for i in range(r))
    terms = {
        (2, 1) + (0,) * r: 1,
        (1, 0) + (0,) * r: 1,
    }
    for i, n in enumerate(exponents):
        exp = (0, 0) + tuple(n if j == i else 0 for j in range(r))
        terms[exp] = 1
    return MultiPoly(names, terms)


def default_cubic() -> MultiPoly:
    """x^3 - x, the standard separable cubic for the curve-union counts."""
    return parse_polynomial("x^3 - x", vars=("x",))


NAMED_FIXTURES = {
    "russell": (russell, 0),
    "fourfold": (fourfold, 0),
    "diagonal": (diagonal, None),
    "koras_russell": (koras_russell, None),
}


def build_fixture(name: str, args: tuple[int, ...] = ()) -> MultiPoly:
    """Look up a fixture by name; `args` are the exponents where applicable.

    Names taking no arguments reject any; the diagonal and koras_russell
    families require at least one exponent.  Hyphens in the name are treated
    as underscores.
    """
    try:
        builder, arity = NAMED_FIXTURES[name.replace("-", "_")]
    except KeyError:
        raise ValueError(
            f"unknown fixture {name!r}; choose from {sorted(NAMED_FIXTURES)}"
        ) from None
    if arity == 0:
        if args:
            raise ValueError(f"fixture {name!r} takes no exponents")
        return builder()
    if not args:
        raise ValueError(f"fixture {name!r} needs at least one exponent")
    return builder(*args)

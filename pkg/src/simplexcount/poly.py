"""Sparse multivariate integer polynomials and their text form.

A polynomial is stored as a map from exponent vectors to nonzero integer
coefficients, together with an ordered tuple of variable names.  The parser
accepts sums of integer-coefficient monomials like ``x^2*y + x + z^2 + t^3``,
with an optional trailing ``= 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .lattice import SupportSet

Exponent = tuple[int, ...]


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class MultiPoly:
    """Integer polynomial in the variables `vars`, as exponent -> coefficient.

    Zero coefficients are dropped on construction, so the zero polynomial has
    an empty term map.  Exponent vectors must match len(vars) and be
    componentwise nonnegative.
    """

    vars: tuple[str, ...]
    terms: dict[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        names = tuple(self.vars)
        if not names:
            raise ValueError("a polynomial needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        clean: dict[Exponent, int] = {}
        for exp, coeff in self.terms.items():
            e = tuple(int(x) for x in exp)
            if len(e) != len(names):
                raise ValueError(f"exponent {e} does not have length {len(names)}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = int(coeff)
            if c:
                clean[e] = c
        object.__setattr__(self, "vars", names)
        object.__setattr__(self, "terms", clean)

    @property
    def num_vars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Exponent) -> int:
        return self.terms.get(tuple(exp), 0)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        pieces = []
        for i, (exp, coeff) in enumerate(ordered):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.vars, exp)
                if e
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)


def support(p: MultiPoly) -> SupportSet:
    """Exponent vectors of the nonzero terms, as a lattice point set."""
    return SupportSet(p.num_vars, frozenset(p.terms))


def specialize(p: MultiPoly, keep: Iterable[int]) -> MultiPoly:
    """Set every variable outside `keep` (0-based indices) to zero.

    Terms with a positive exponent on a dropped variable vanish; the rest
    survive unchanged, so no cancellation can occur.  The variable tuple is
    kept intact to preserve exponent indexing.
    """
    keep_set = set(keep)
    for i in keep_set:
        if not 0 <= i < p.num_vars:
            raise IndexError(f"variable index {i} out of range for {p.num_vars} variables")
    kept = {
        exp: coeff
        for exp, coeff in p.terms.items()
        if all(e == 0 for i, e in enumerate(exp) if i not in keep_set)
    }
    return MultiPoly(p.vars, kept)


# ---------------------------------------------------------------------------
# parsing

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_UINT_RE = re.compile(r"[0-9]+")
_WS_RE = re.compile(r"\s*")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        self.pos = _WS_RE.match(self.text, self.pos).end()

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def match(self, pattern: re.Pattern) -> Optional[str]:
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group()


def parse_polynomial(text: str, vars: Optional[Sequence[str]] = None) -> MultiPoly:
    """Parse a sum of integer monomials, optionally ending in ``= 0``.

    Each term is an optional sign, an optional integer coefficient, and a
    product of ``name`` or ``name^exp`` factors; ``*`` between factors is
    optional.  With `vars` given, every identifier must be one of them and
    the exponent vectors use that ordering; otherwise the variables are the
    identifiers encountered, in first-appearance order.
    """
    sc = _Scanner(text)
    declared = tuple(vars) if vars is not None else None
    if declared is not None:
        if not declared:
            raise ValueError("vars must be nonempty when given")
        if len(set(declared)) != len(declared):
            raise ValueError(f"duplicate variable names in {declared}")
    seen: list[str] = []
    index: dict[str, int] = {v: i for i, v in enumerate(declared)} if declared else {}
    raw_terms: list[tuple[int, dict[str, int]]] = []

    def parse_term(sign: int):
        coeff = sign
        powers: dict[str, int] = {}
        have_factor = False
        lit = sc.match(_UINT_RE)
        if lit is not None:
            coeff *= int(lit)
            have_factor = True
        while True:
            sc.skip_ws()
            here = sc.pos
            starred = sc.take("*")
            if starred:
                sc.skip_ws()
            ident_start = sc.pos
            name = sc.match(_IDENT_RE)
            if name is None:
                if starred:
                    raise PolyParseError("expected a variable after '*'", sc.pos)
                sc.pos = here
                break
            if declared is not None and name not in index:
                raise PolyParseError(f"unknown variable '{name}'", ident_start)
            if declared is None and name not in index:
                index[name] = len(seen)
                seen.append(name)
            exp = 1
            if sc.take("^"):
                digits = sc.match(_UINT_RE)
                if digits is None:
                    raise PolyParseError(
                        "exponent must be a non-negative integer literal", sc.pos
                    )
                exp = int(digits)
            powers[name] = powers.get(name, 0) + exp
            have_factor = True
        if not have_factor:
            raise PolyParseError("expected a term", sc.pos)
        raw_terms.append((coeff, powers))

    sc.skip_ws()
    first_sign = -1 if sc.take("-") else 1
    if first_sign == -1:
        sc.skip_ws()
    parse_term(first_sign)
    while True:
        sc.skip_ws()
        if sc.take("+"):
            sign = 1
        elif sc.take("-"):
            sign = -1
        else:
            break
        sc.skip_ws()
        parse_term(sign)
    sc.skip_ws()
    if sc.take("="):
        sc.skip_ws()
        if not sc.take("0"):
            raise PolyParseError("right-hand side must be the literal 0", sc.pos)
        sc.skip_ws()
    if sc.pos != len(sc.text):
        raise PolyParseError(f"unexpected character {sc.peek()!r}", sc.pos)

    names = declared if declared is not None else tuple(seen)
    if not names:
        raise ValueError(
            "cannot infer variables from a constant polynomial; pass vars explicitly"
        )
    terms: dict[Exponent, int] = {}
    for coeff, powers in raw_terms:
        exp = tuple(powers.get(v, 0) for v in names)
        terms[exp] = terms.get(exp, 0) + coeff
    return MultiPoly(names, terms)

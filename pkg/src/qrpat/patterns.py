"""Layout equivalence of residue plots and the line bundle under the vertices.

The placement of each parabola family, viewed as a whole, is fixed by
beta reduced modulo c*b.  Collecting that value for every anchor
fraction gives a fingerprint of the modulus; two moduli congruent
modulo a layout period draw their families in the same positions for
every denominator the period covers.  The family vertices themselves
are rational points of the wrapped curves Y = (2nX - sX^2) mod 1, where
s is any representative of m modulo the period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .parabola import fraction_params
from .residues import ReducedFraction, farey_fractions

__all__ = [
    "BetaSignature",
    "BundleLine",
    "DenominatorSet",
    "LayoutComparison",
    "beta_signature",
    "bundle_parameter",
    "check_period",
    "denominator_set",
    "layouts_equivalent",
    "vertex_on_bundle",
]


def check_period(period: int) -> int:
    """Validate a layout period (even integer >= 4)."""
    if period < 4 or period % 2:
        raise ValueError(f"layout period must be an even integer >= 4, got {period}")
    return period


@dataclass(frozen=True)
class DenominatorSet:
    """Denominators whose family layout is pinned down by a period.

    b belongs when b divides the period (odd b) or 2*b divides it
    (even b); equivalently c*b divides the period.
    """

    period: int
    members: frozenset[int]

    def __contains__(self, b: int) -> bool:
        return b in self.members


@dataclass(frozen=True)
class BetaSignature:
    """Layout fingerprint of a modulus: beta mod c*b per anchor fraction."""

    m: int
    max_denominator: int
    entries: dict[ReducedFraction, int]


@dataclass(frozen=True)
class BundleLine:
    """The wrapped curve Y = (2nX - sX^2) mod 1 on X in [0, 1]."""

    s: int
    n: int

    def y_at(self, x: Fraction) -> Fraction:
        return (2 * self.n * x - self.s * x * x) % 1

    def contains(self, x: Fraction, y: Fraction | int) -> bool:
        """Exact membership: Y + s*X^2 - 2*n*X is an integer."""
        return (Fraction(y) + self.s * x * x - 2 * self.n * x) % 1 == 0


class LayoutComparison(NamedTuple):
    equivalent: bool
    witness: ReducedFraction | None


def _covered(b: int, period: int) -> bool:
    return period % b == 0 if b % 2 else period % (2 * b) == 0


def denominator_set(period: int, max_b: int) -> DenominatorSet:
    """All covered denominators up to max_b for the given period."""
    check_period(period)
    if max_b < 1:
        raise ValueError(f"max_b must be >= 1, got {max_b}")
    return DenominatorSet(
        period, frozenset(b for b in range(1, max_b + 1) if _covered(b, period))
    )


def beta_signature(m: int, max_denominator: int) -> BetaSignature:
    """Fingerprint of m over every reduced fraction with denominator <= max_denominator.

    Each entry is beta reduced to [0, c*b); it depends only on m mod c*b.
    """
    if m <= max_denominator * max_denominator:
        raise ValueError(
            f"modulus {m} must exceed max_denominator^2 = {max_denominator ** 2}"
        )
    entries = {}
    for frac in farey_fractions(max_denominator):
        params = fraction_params(m, frac)
        entries[frac] = params.beta % (params.c * frac.b)
    return BetaSignature(m, max_denominator, entries)


def layouts_equivalent(
    m1: int, m2: int, period: int, max_denominator: int
) -> LayoutComparison:
    """Whether two moduli place their parabola families identically.

    Signature entries are compared for every denominator covered by the
    period.  On a mismatch the witness is the offending fraction with the
    smallest denominator (ties broken by smallest numerator).
    """
    dset = denominator_set(period, max_denominator)
    sig1 = beta_signature(m1, max_denominator)
    sig2 = beta_signature(m2, max_denominator)
    for frac in sorted(sig1.entries, key=ReducedFraction.sort_key):
        if frac.b not in dset.members:
            continue
        if sig1.entries[frac] != sig2.entries[frac]:
            return LayoutComparison(False, frac)
    return LayoutComparison(True, None)


def bundle_parameter(m: int, period: int) -> int:
    """The representative s of m mod period in (-period/2, period/2].

    Any representative satisfies the vertex membership below; the
    balanced one is the canonical small-|s| choice.
    """
    check_period(period)
    r = m % period
    return r - period if 2 * r > period else r


def _smallest_line_index(coef: int, rhs: int, mod: int) -> int:
    """Solve coef * n == rhs (mod mod) for the n of smallest absolute value.

    Ties between n and -n go to the positive solution.
    """
    if mod == 1:
        return 0
    g = math.gcd(coef, mod)
    if rhs % g:
        raise ArithmeticError(f"{coef}*n == {rhs} (mod {mod}) has no solution")
    reduced = mod // g
    n0 = (rhs // g) * pow(coef // g, -1, reduced) % reduced
    return n0 - reduced if 2 * n0 > reduced else n0


def vertex_on_bundle(
    m: int, period: int, frac: ReducedFraction, s: int | None = None
) -> list[tuple[int, int]]:
    """Match every vertex of the family at a/b to a bundle line.

    For each vertex index k in [0, b_prime) the vertex sits at
    (X, Y) = (a/b, (beta' / b^2 + k / b_prime) mod 1) with
    beta' = beta mod c*b, and the returned n is the smallest-|n| line
    index with Y + s*X^2 - 2*n*X an integer (ties to the positive n).
    Membership is verified in exact rational arithmetic before the pair
    is returned.

    The fraction's denominator must be covered by the period; s defaults
    to the balanced representative of m but any other representative of
    the same class may be passed in.
    """
    check_period(period)
    if not _covered(frac.b, period):
        raise ValueError(
            f"denominator {frac.b} is not covered by period {period}"
        )
    params = fraction_params(m, frac)
    if s is None:
        s = bundle_parameter(m, period)
    elif (m - s) % period:
        raise ValueError(f"s = {s} does not represent {m} modulo {period}")
    a, b = frac.a, frac.b
    b_prime = params.b_prime
    beta_prime = params.beta % (params.c * b)
    x_v = Fraction(a, b)
    pairs = []
    for k in range(b_prime):
        y_v = (Fraction(beta_prime, b * b) + Fraction(k, b_prime)) % 1
        # (Y + s*X^2) has denominator dividing b^2 and its numerator over
        # b^2 is divisible by b whenever the denominator is covered.
        scaled = (y_v + s * x_v * x_v) * b * b
        if scaled.denominator != 1 or scaled.numerator % b:
            raise ArithmeticError(
                f"vertex k={k} of {frac} mod {m} is off the bundle lattice"
            )
        n = _smallest_line_index(2 * a, scaled.numerator // b, b)
        if not BundleLine(s, n).contains(x_v, y_v):
            raise ArithmeticError(
                f"line index {n} fails exact membership for vertex k={k} of {frac}"
            )
        pairs.append((k, n))
    return pairs

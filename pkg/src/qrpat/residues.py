"""Exact arithmetic primitives for quadratic-residue pattern analysis.

Everything here is pure and exact: Python integers are unbounded, so
squaring never overflows for any modulus width, and rational values are
carried as ``fractions.Fraction`` instances, which stay reduced with a
positive denominator and support the mod-m / mod-1 reductions the
predictors rely on (``r % m`` yields the representative in [0, m)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "ReducedFraction",
    "balanced_residue",
    "check_modulus",
    "farey_fractions",
    "layout_period",
    "q_congruent",
    "qr_mod",
]

# Exact rational carrier used throughout the package.
Rational = Fraction


def check_modulus(m: int) -> int:
    """Validate a plot modulus (any integer >= 2)."""
    if m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m}")
    return m


@dataclass(frozen=True)
class ReducedFraction:
    """A fraction a/b in lowest terms, confined to [0, 1].

    These are the anchors of the parabola families: each family sits
    around x = (a/b) * m in a residue plot.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ValueError(f"denominator must be positive, got {self.b}")
        if not 0 <= self.a <= self.b:
            raise ValueError(f"{self.a}/{self.b} lies outside [0, 1]")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"{self.a}/{self.b} is not in lowest terms")

    @classmethod
    def parse(cls, text: str) -> "ReducedFraction":
        """Parse 'a/b' (or a bare integer) into a ReducedFraction."""
        num, sep, den = text.partition("/")
        try:
            a = int(num)
            b = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"cannot parse fraction {text!r}") from None
        return cls(a, b)

    def value(self) -> Fraction:
        return Fraction(self.a, self.b)

    def sort_key(self) -> tuple[int, int]:
        """Order by denominator first, then numerator: simplest fractions first."""
        return (self.b, self.a)

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


def qr_mod(x: int, m: int) -> int:
    """Quadratic residue of x modulo m: the remainder of x*x divided by m."""
    check_modulus(m)
    return x * x % m


def q_congruent(s: Fraction | int, t: Fraction | int, m: int) -> bool:
    """True when the rationals s and t differ by an integer multiple of m."""
    check_modulus(m)
    return (Fraction(s) - Fraction(t)) % m == 0


def balanced_residue(v: int, n: int) -> int:
    """The representative of v mod n nearest zero, taken from [-n/2, n/2).

    At the even-n halfway point the negative end is returned, which makes
    (v - balanced_residue(v, n)) // n equal floor(v/n + 1/2): rounding to
    nearest with halves going up.
    """
    if n < 1:
        raise ValueError(f"modulus for balanced reduction must be >= 1, got {n}")
    r = v % n
    return r - n if 2 * r >= n else r


def farey_fractions(max_denominator: int) -> list[ReducedFraction]:
    """All reduced fractions in [0, 1] with denominator <= max_denominator,
    in increasing order, without duplicates."""
    if max_denominator < 1:
        raise ValueError(f"max_denominator must be >= 1, got {max_denominator}")
    n = max_denominator
    sequence = [ReducedFraction(0, 1)]
    a, b, c, d = 0, 1, 1, n
    while c <= n:
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        sequence.append(ReducedFraction(a, b))
    return sequence


def layout_period(n: int) -> int:
    """Twice the least common multiple of 2..n.

    Moduli congruent modulo this period place their residue parabolas
    identically for every anchor denominator the period covers (see
    ``qrpat.patterns.denominator_set``).
    """
    if n < 2:
        raise ValueError(f"layout_period needs n >= 2, got {n}")
    return 2 * math.lcm(*range(2, n + 1))

"""Parabola families in quadratic-residue plots.

Residue points near x = (a/b)*m fall on a small set of upward parabolas.
This module computes them exactly: each family member is an integer
quadratic r = A*j^2 + B*j + C evaluated along the lattice
x = x0 + i + j*b_prime, and all members share the rational vertex
abscissa a*m/b while their vertex ordinates are multiples of m/b^2
spaced exactly m/b_prime apart.

No floating point is used anywhere; vertices are ``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .residues import ReducedFraction, balanced_residue, check_modulus, qr_mod

__all__ = [
    "FractionParams",
    "Parabola",
    "ParabolaFamily",
    "canonical_offsets",
    "covering_members",
    "evaluate_parabola",
    "fraction_params",
    "parabola_family",
    "residues_near",
    "verify_identity",
]


@dataclass(frozen=True)
class FractionParams:
    """Exact quantities attached to one (modulus, anchor fraction) pair.

    x0 is the integer nearest (a/b)*m, with halves rounding up, and r0 is
    its quadratic residue.  alpha is the balanced remainder of a*m mod b,
    so x0 == (a*m - alpha) // b exactly.  beta, normalized to [0, b*b),
    fixes the vertex heights of the family through the integer identity

        b*b * r0 == beta * m + alpha*alpha

    which holds whenever m > b*b / 4 (guaranteed here by the stronger
    construction guard m > b*b).  b_prime is the lattice stride of the
    family (b for odd b, b/2 for even b) and c == b // b_prime.
    """

    m: int
    frac: ReducedFraction
    b_prime: int
    c: int
    alpha: int
    beta: int
    x0: int
    r0: int


@dataclass(frozen=True)
class Parabola:
    """One family member: r == (A*j*j + B*j + C) mod m at x = x0 + i + j*b_prime.

    a_prime indexes the member's vertex height class modulo b_prime; the
    vertex itself sits at (vertex_x, vertex_y) with vertex_y already
    reduced into [0, m).
    """

    params: FractionParams
    i: int
    a_prime: int
    A: int
    B: int
    C: int
    vertex_x: Fraction
    vertex_y: Fraction


@dataclass(frozen=True)
class ParabolaFamily:
    """The b_prime parabolas anchored at one fraction of the modulus."""

    params: FractionParams
    members: tuple[Parabola, ...]


def canonical_offsets(b_prime: int) -> range:
    """The b_prime offsets i, one per residue class mod b_prime.

    The range runs from -ceil(b_prime/2)+1 through floor(b_prime/2) so
    that every class appears exactly once for either parity.
    """
    return range(-((b_prime + 1) // 2) + 1, b_prime // 2 + 1)


def _anchor(m: int, frac: ReducedFraction) -> tuple[int, int]:
    """(alpha, x0): balanced remainder of a*m mod b and the anchor integer."""
    alpha = balanced_residue(frac.a * m, frac.b)
    return alpha, (frac.a * m - alpha) // frac.b


def fraction_params(m: int, frac: ReducedFraction) -> FractionParams:
    """Compute all anchor quantities for the family at (a/b) * m.

    Requires m > b*b; smaller moduli have no meaningful family at this
    denominator and would break the vertex-height identity.
    """
    check_modulus(m)
    a, b = frac.a, frac.b
    if m <= b * b:
        raise ValueError(f"modulus {m} must exceed the squared denominator {b * b}")
    alpha, x0 = _anchor(m, frac)
    r0 = qr_mod(x0, m)
    beta = (a * a * m - 2 * a * alpha) % (b * b)
    b_prime = b if b % 2 else b // 2
    return FractionParams(m, frac, b_prime, b // b_prime, alpha, beta, x0, r0)


def verify_identity(params: FractionParams) -> bool:
    """Check the exact integer identity b*b * r0 == beta * m + alpha*alpha.

    Equivalently r0 is the nearest integer to beta * m / b^2, since the
    correction alpha^2 / b^2 never exceeds 1/4.
    """
    b = params.frac.b
    return b * b * params.r0 == params.beta * params.m + params.alpha * params.alpha


def parabola_family(params: FractionParams) -> ParabolaFamily:
    """Build the b_prime member parabolas over the canonical offsets.

    Vertex ordinates are the [0, m) representatives of
    beta * m / b^2 + a_prime * m / b_prime, and the a_prime values cover
    every class modulo b_prime exactly once.
    """
    m, a, b = params.m, params.frac.a, params.frac.b
    b_prime, c = params.b_prime, params.c
    two_over_c = 2 // c
    vertex_x = Fraction(a * m, b)
    height_unit = Fraction(m, b * b)
    members = []
    for i in canonical_offsets(b_prime):
        a_prime = (two_over_c * i * a) % b_prime
        members.append(
            Parabola(
                params=params,
                i=i,
                a_prime=a_prime,
                A=b_prime * b_prime,
                B=2 * b_prime * i - two_over_c * params.alpha,
                C=qr_mod(params.x0 + i, m),
                vertex_x=vertex_x,
                vertex_y=(params.beta * height_unit + Fraction(a_prime * m, b_prime)) % m,
            )
        )
    return ParabolaFamily(params, tuple(members))


def evaluate_parabola(p: Parabola, j: int) -> tuple[int, int]:
    """Point (x, r) of member p at lattice step j, with x kept inside [0, m)."""
    m = p.params.m
    x = p.params.x0 + p.i + j * p.params.b_prime
    if not 0 <= x < m:
        raise ValueError(f"lattice step {j} puts x = {x} outside [0, {m})")
    return x, (p.A * j * j + p.B * j + p.C) % m


def residues_near(m: int, frac: ReducedFraction, window: int) -> list[tuple[int, int]]:
    """Brute-force residue points with |x - x0| <= window, by direct squaring.

    This is the oracle the predicted families are checked against; it
    never touches the lattice formulas.
    """
    check_modulus(m)
    if window < 1:
        raise ValueError(f"window must be a positive integer, got {window}")
    if 2 * window >= m:
        raise ValueError(f"window {window} must be smaller than half the modulus {m}")
    _, x0 = _anchor(m, frac)
    lo = max(0, x0 - window)
    hi = min(m - 1, x0 + window)
    return [(x, qr_mod(x, m)) for x in range(lo, hi + 1)]


def covering_members(family: ParabolaFamily, x: int, r: int) -> list[tuple[Parabola, int]]:
    """All (member, j) pairs of the family that hit the point (x, r)."""
    x0 = family.params.x0
    b_prime = family.params.b_prime
    hits = []
    for p in family.members:
        d = x - x0 - p.i
        if d % b_prime:
            continue
        j = d // b_prime
        if (p.A * j * j + p.B * j + p.C) % family.params.m == r:
            hits.append((p, j))
    return hits

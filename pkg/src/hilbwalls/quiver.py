"""Numerics of the heart A(k) generated by O(k-2)[2], O(k-1)[1], O(k).

Objects of A(k) carry dimension vectors (n0, n1, n2); the matrices C(k) and
C(k)^-1 convert these to and from Chern characters. Quiver regions are the
open unit discs centered at (k-1, 0). Only the King weight hyperplane
arrangement is modeled, not stability of individual representations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ._exact import Surd, as_fraction, sign_surd
from .bridgeland import StabilityPoint, WallGeometry, WallKind, _triple
from .errors import NotInCategory, PreconditionViolation, ZeroClass

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class DimensionVector:
    n0: int
    n1: int
    n2: int

    def __post_init__(self):
        for v in (self.n0, self.n1, self.n2):
            if not isinstance(v, int) or v < 0:
                raise PreconditionViolation(f"dimension vector entries must be nonnegative integers: {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n0, self.n1, self.n2)

    def __str__(self) -> str:
        return f"({self.n0}, {self.n1}, {self.n2})"


def _vec(v) -> tuple:
    return v.as_tuple() if isinstance(v, DimensionVector) else tuple(v)


def conversion_matrix(k: int) -> Matrix:
    """C(k): dimensions to (r, c, d)."""
    h = Fraction(1, 2)
    return (
        (Fraction(1), Fraction(-1), Fraction(1)),
        (Fraction(k - 2), Fraction(-(k - 1)), Fraction(k)),
        (h * (k - 2) ** 2, -h * (k - 1) ** 2, h * k * k),
    )


def inverse_conversion_matrix(k: int) -> Matrix:
    """C(k)^-1: (r, c, d) to dimensions."""
    h = Fraction(1, 2)
    return (
        (h * k * (k - 1), -h * (2 * k - 1), Fraction(1)),
        (Fraction(k * (k - 2)), Fraction(-(2 * k - 2)), Fraction(2)),
        (h * (k - 1) * (k - 2), -h * (2 * k - 3), Fraction(1)),
    )


def _apply(m: Matrix, v) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(sum((row[i] * v[i] for i in range(3)), Fraction(0)) for row in m)


def dims_to_chern(k: int, v) -> tuple[Fraction, Fraction, Fraction]:
    return _apply(conversion_matrix(k), _vec(v))


def chern_to_dims(k: int, ch) -> tuple[Fraction, Fraction, Fraction]:
    """Rational dimension triple; membership in A(k) needs it integral and >= 0."""
    return _apply(inverse_conversion_matrix(k), _triple(ch))


def as_dimension_vector(dims) -> DimensionVector:
    """Turn a rational triple into a DimensionVector, or raise NotInCategory."""
    if any(Fraction(x).denominator != 1 or x < 0 for x in dims):
        raise NotInCategory(f"{tuple(str(x) for x in dims)} is not a nonnegative integer vector")
    return DimensionVector(*(int(x) for x in dims))


def ideal_dims(n: int, d: int) -> DimensionVector:
    """Dimension vector of I_Z[1] in A(-d) for Z of length n."""
    if n < 1 or d < 0:
        raise PreconditionViolation("need n >= 1 and d >= 0")
    need = (d + 1) * (d + 2) // 2
    if n < need:
        raise NotInCategory(f"I_Z[1] with n={n} is not in A(-{d}): needs n >= {need}")
    return DimensionVector(n - d * (d + 1) // 2, 2 * n - d * (d + 2), n - need)


def quiver_region_contains(k: int, p: StabilityPoint) -> bool:
    dx = p.s - (k - 1)
    return dx * dx + p.t * p.t < 1


def regions_meeting_wall(w) -> list[int]:
    """All k whose quiver disc meets the open semicircle of ``w``.

    ``w`` is anything with ``center`` and ``radius_sq`` (a Wall or a
    semicircular WallGeometry). With delta the distance between centers and
    rho the radius, the arc meets the open disc iff |delta - rho| < 1.
    """
    if isinstance(w, WallGeometry) and w.kind is not WallKind.SEMICIRCLE:
        return []
    c, rsq = as_fraction(w.center), as_fraction(w.radius_sq)
    if rsq <= 0:
        return []
    left = Surd(c - 1, -1, rsq).floor()
    right = Surd(c + 1, 1, rsq).ceil()
    out = []
    for k in range(left + 1, right + 2):
        delta = abs(c - (k - 1))
        if sign_surd(delta - 1, -1, rsq) < 0 and sign_surd(delta + 1, -1, rsq) > 0:
            out.append(k)
    return out


def king_hyperplanes(v) -> list[DimensionVector]:
    """Proper nonzero sub-vectors d <= v; each gives the hyperplane d.a = 0."""
    v = _vec(v)
    if not any(v):
        raise ZeroClass("dimension vector must be nonzero")
    out = []
    for d in product(*(range(x + 1) for x in v)):
        if any(d) and d != v:
            out.append(DimensionVector(*d))
    return out


@dataclass(frozen=True)
class KingWeights:
    """Integer weights (a0, a1, a2) with v.a = 0 for the vector they were built for."""

    a0: int
    a1: int
    a2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)

    def pairing(self, d) -> int:
        return sum(x * y for x, y in zip(_vec(d), self.as_tuple()))


def normalize_weights(v, a) -> KingWeights:
    """Project ``a`` orthogonally onto {v.a = 0}, clear denominators and
    divide by the gcd; the sign is chosen so that a0 <= 0."""
    v = tuple(Fraction(x) for x in _vec(v))
    a = tuple(as_fraction(x) for x in a)
    vv = sum(x * x for x in v)
    if vv == 0:
        raise ZeroClass("dimension vector must be nonzero")
    coef = sum(x * y for x, y in zip(v, a)) / vv
    proj = [ai - coef * vi for ai, vi in zip(a, v)]
    den = math.lcm(*(x.denominator for x in proj))
    ints = [int(x * den) for x in proj]
    g = math.gcd(*ints)
    if g == 0:
        return KingWeights(0, 0, 0)
    ints = [x // g for x in ints]
    if ints[0] > 0:
        ints = [-x for x in ints]
    return KingWeights(*ints)


def destabilizing_subvectors(v, weights: KingWeights) -> list[DimensionVector]:
    """Sub-vectors d with d.a >= 0; a representation of dimension v can only
    be King-stable for these weights if none of them occurs as a subrepresentation."""
    return [d for d in king_hyperplanes(v) if weights.pairing(d) >= 0]

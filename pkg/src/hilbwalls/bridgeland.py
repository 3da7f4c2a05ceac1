"""Chern characters on the projective plane, the (s, t) central charges and
potential walls between two characters."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from ._exact import Rational, Surd, as_fraction, frac_str, sign_two_surds
from .errors import PreconditionViolation, ProportionalInput, ZeroDegree

Triple = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class ChernCharacter:
    """(rank, c1, ch2) with c1 a multiple of the line class L and ch2 of L^2."""

    ch0: int
    ch1: int
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch2", as_fraction(self.ch2))
        if not isinstance(self.ch0, int) or not isinstance(self.ch1, int):
            raise PreconditionViolation("rank and degree must be integers")
        if (2 * self.ch2).denominator != 1:
            raise PreconditionViolation(f"ch2 = {self.ch2} is not a half-integer")
        if (Fraction(self.ch1 * self.ch1, 2) - self.ch2).denominator != 1:
            raise PreconditionViolation(f"c2 of {self} is not an integer")

    @classmethod
    def line_bundle(cls, m: int, multiplicity: int = 1) -> "ChernCharacter":
        """ch(O(m)^multiplicity)."""
        return cls(multiplicity, multiplicity * m, Fraction(multiplicity * m * m, 2))

    @classmethod
    def ideal_sheaf(cls, n: int) -> "ChernCharacter":
        return cls(1, 0, Fraction(-n))

    @property
    def c2(self) -> Fraction:
        return Fraction(self.ch1 * self.ch1, 2) - self.ch2

    def triple(self) -> Triple:
        return (Fraction(self.ch0), Fraction(self.ch1), self.ch2)

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 - other.ch0, self.ch1 - other.ch1, self.ch2 - other.ch2)

    def __mul__(self, k: int) -> "ChernCharacter":
        return ChernCharacter(self.ch0 * k, self.ch1 * k, self.ch2 * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.ch0}, {self.ch1}, {frac_str(self.ch2)})"


def _triple(ch) -> Triple:
    if isinstance(ch, ChernCharacter):
        return ch.triple()
    r, c, d = ch
    return (as_fraction(r), as_fraction(c), as_fraction(d))


@dataclass(frozen=True)
class StabilityPoint:
    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", as_fraction(self.s))
        object.__setattr__(self, "t", as_fraction(self.t))
        if self.t <= 0:
            raise PreconditionViolation(f"t must be positive, got {self.t}")


def twist(ch, s: Rational) -> Triple:
    """ch * exp(-sL)."""
    r, c, d = _triple(ch)
    s = as_fraction(s)
    return (r, c - s * r, d - s * c + s * s / 2 * r)


def central_charge(ch, p: StabilityPoint) -> tuple[Fraction, Fraction]:
    """(d_t, r_t); the slope is d_t / r_t, infinite when r_t = 0."""
    r, c, d = twist(ch, p.s)
    return (-(p.t * p.t) / 2 * r + d, p.t * c)


def compare_slopes(a, b, p: StabilityPoint) -> int:
    """Sign of mu(a) - mu(b) at p, with r_t = 0 meaning slope +infinity."""
    da, ra = central_charge(a, p)
    db, rb = central_charge(b, p)
    if ra == 0 or rb == 0:
        if ra == 0 and rb == 0:
            return 0
        return 1 if ra == 0 else -1
    # r_t is nonnegative on the heart; keep the sign explicit anyway
    lhs, rhs = da * rb, db * ra
    sign = (lhs > rhs) - (lhs < rhs)
    return sign if ra * rb > 0 else -sign


class WallKind(enum.Enum):
    VERTICAL = "vertical"
    SEMICIRCLE = "semicircle"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class WallGeometry:
    kind: WallKind
    s0: Fraction | None = None
    center: Fraction | None = None
    radius_sq: Fraction | None = None


def _proportional(a: Triple, b: Triple) -> bool:
    r, c, d = a
    r2, c2, d2 = b
    return r * c2 == r2 * c and r * d2 == r2 * d and c * d2 == c2 * d


def wall_polynomial(a, b, s: Rational, t_sq: Rational) -> Fraction:
    """(s^2+t^2)(rc'-r'c) - 2s(rd'-r'd) + 2(cd'-c'd); zero exactly on the wall."""
    r, c, d = _triple(a)
    r2, c2, d2 = _triple(b)
    s, t_sq = as_fraction(s), as_fraction(t_sq)
    return (s * s + t_sq) * (r * c2 - r2 * c) - 2 * s * (r * d2 - r2 * d) + 2 * (c * d2 - c2 * d)


def potential_wall(a, b) -> WallGeometry:
    ta, tb = _triple(a), _triple(b)
    if _proportional(ta, tb):
        raise ProportionalInput(f"{ta} and {tb} are proportional")
    r, c, d = ta
    r2, c2, d2 = tb
    mu_term = r * c2 - r2 * c
    d_term = r * d2 - r2 * d
    cd_term = c * d2 - c2 * d
    if mu_term == 0:
        if d_term == 0:
            return WallGeometry(WallKind.DEGENERATE)
        return WallGeometry(WallKind.VERTICAL, s0=cd_term / d_term)
    center = d_term / mu_term
    radius_sq = center * center - 2 * cd_term / mu_term
    if radius_sq <= 0:
        return WallGeometry(WallKind.DEGENERATE, center=center, radius_sq=radius_sq)
    return WallGeometry(WallKind.SEMICIRCLE, center=center, radius_sq=radius_sq)


def wall_center_for_ideal(n: int, f) -> Fraction:
    """Center of the wall where ``f`` destabilizes an ideal of n points."""
    r, c, d = _triple(f)
    if c == 0:
        raise ZeroDegree(f"{f} has c1 = 0")
    return (d + r * n) / c


def below_ideal_vertex(n: int, x: Rational) -> bool:
    """x < -sqrt(2n), i.e. a semicircle of center x is a genuine wall for (1,0,-n)."""
    x = as_fraction(x)
    return x < 0 and x * x > 2 * n


def endpoints_nested(c1: Rational, rsq1: Rational, c2: Rational, rsq2: Rational) -> bool:
    """True iff semicircle 2 sits strictly inside semicircle 1:
    c1 - r1 < c2 - r2 and c2 + r2 < c1 + r1."""
    c1, c2 = as_fraction(c1), as_fraction(c2)
    left = sign_two_surds(c1 - c2, -1, rsq1, 1, rsq2)
    right = sign_two_surds(c2 - c1, 1, rsq2, -1, rsq1)
    return left < 0 and right < 0


def endpoint(center: Rational, radius_sq: Rational, side: int) -> Surd:
    """The endpoint ``center + side*sqrt(radius_sq)`` as a Surd."""
    return Surd(as_fraction(center), side, as_fraction(radius_sq))


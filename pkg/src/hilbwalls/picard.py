"""Divisor and curve classes on the Hilbert scheme of n points in the plane.

The Neron-Severi space is spanned by H (pullback from the symmetric product)
and B (the locus of non-reduced schemes). Curve classes are kept symbolic;
:func:`intersect` holds the only pairing table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ._exact import Rational, as_fraction, frac_str
from .errors import MismatchedAmbient, PreconditionViolation, ZeroClass


@dataclass(frozen=True)
class DivisorClass:
    h_coeff: Fraction
    b_coeff: Fraction

    def __post_init__(self):
        object.__setattr__(self, "h_coeff", as_fraction(self.h_coeff))
        object.__setattr__(self, "b_coeff", as_fraction(self.b_coeff))

    @classmethod
    def ray(cls, alpha: Rational) -> "DivisorClass":
        """The normalized ray ``H - alpha*B``."""
        return cls(Fraction(1), -as_fraction(alpha))

    @property
    def alpha(self) -> Fraction:
        """Slope alpha in ``H - alpha*B``; only meaningful when h_coeff > 0."""
        if self.h_coeff <= 0:
            raise ValueError(f"{self} is not of the form H - alpha*B")
        return -self.b_coeff / self.h_coeff

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h_coeff + other.h_coeff, self.b_coeff + other.b_coeff)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h_coeff - other.h_coeff, self.b_coeff - other.b_coeff)

    def __mul__(self, k: Rational) -> "DivisorClass":
        k = as_fraction(k)
        return DivisorClass(self.h_coeff * k, self.b_coeff * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.h_coeff == 0 and self.b_coeff == 0

    def __str__(self) -> str:
        h, b = self.h_coeff, self.b_coeff
        if h == 0 and b == 0:
            return "0"
        parts = []
        if h:
            parts.append("H" if h == 1 else "-H" if h == -1 else f"{frac_str(h)} H")
        if b:
            mag = "B" if abs(b) == 1 else f"{frac_str(abs(b))} B"
            if parts:
                parts.append(f"{'-' if b < 0 else '+'} {mag}")
            else:
                parts.append(mag if b > 0 else f"-{mag}")
        return " ".join(parts)


H = DivisorClass(1, 0)
B = DivisorClass(0, 1)


class CurveKind(enum.Enum):
    DIAGONAL_FIBER = "C"
    LINE_PENCIL = "C_r"
    CONIC_PENCIL = "A_2k"
    MOVING_E = "R_E"
    MOVING_F = "R_F"


@dataclass(frozen=True)
class CurveClass:
    """A named test curve. ``params`` is () for C(n), (r,) for C_r(n),
    (k,) for A_{2,k}(n) and (r, s) for the moving curves R."""

    kind: CurveKind
    n: int
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionViolation(f"n must be positive, got {self.n}")
        if self.kind in (CurveKind.LINE_PENCIL, CurveKind.CONIC_PENCIL):
            (p,) = self.params
            if not 1 <= p <= self.n:
                raise PreconditionViolation(f"parameter {p} outside 1..{self.n}")

    def __str__(self) -> str:
        if self.kind is CurveKind.DIAGONAL_FIBER:
            return f"C({self.n})"
        if self.kind is CurveKind.LINE_PENCIL:
            return f"C_{self.params[0]}({self.n})"
        if self.kind is CurveKind.CONIC_PENCIL:
            return f"A_{{2,{self.params[0]}}}({self.n})"
        r, s = self.params
        tag = "E" if self.kind is CurveKind.MOVING_E else "F"
        return f"R_{tag}({r},{s})"


def diagonal_fiber(n: int) -> CurveClass:
    return CurveClass(CurveKind.DIAGONAL_FIBER, n)


def line_pencil(n: int, r: int) -> CurveClass:
    return CurveClass(CurveKind.LINE_PENCIL, n, (r,))


def conic_pencil(n: int, k: int) -> CurveClass:
    return CurveClass(CurveKind.CONIC_PENCIL, n, (k,))


def moving_curve_e(r: int, s: int) -> CurveClass:
    """Pencil on a smooth degree-r curve through a general scheme."""
    return CurveClass(CurveKind.MOVING_E, r * (r + 1) // 2 + s, (r, s))


def moving_curve_f(r: int, s: int) -> CurveClass:
    """Pencil on a smooth degree-(r+2) curve through a general scheme."""
    return CurveClass(CurveKind.MOVING_F, r * (r + 1) // 2 + s, (r, s))


def _pairing(c: CurveClass) -> tuple[int, int]:
    """(H.c, B.c)"""
    if c.kind is CurveKind.DIAGONAL_FIBER:
        return 0, -2
    if c.kind is CurveKind.LINE_PENCIL:
        (r,) = c.params
        return 1, 2 * (r - 1)
    if c.kind is CurveKind.CONIC_PENCIL:
        (k,) = c.params
        return 2, 2 * (k - 1)
    r, s = c.params
    if c.kind is CurveKind.MOVING_E:
        return r, 2 * (r * r - r + s)
    return r + 2, 2 * (r * r + r + s - 1)


def intersect(d: DivisorClass, c: CurveClass, n: int | None = None) -> Fraction:
    """Intersection number ``d . c``. Pass ``n`` to assert the divisor lives
    on the same Hilbert scheme as the curve."""
    if n is not None and n != c.n:
        raise MismatchedAmbient(f"divisor on n={n}, curve on n={c.n}")
    h, b = _pairing(c)
    return d.h_coeff * h + d.b_coeff * b


def _triangular(k: int) -> int:
    return k * (k + 3) // 2


def divisor_Dk(n: int, k: int) -> DivisorClass:
    """Schemes failing to impose independent conditions on degree-k curves,
    defined when k(k+3)/2 >= n."""
    if n < 1 or k < 1:
        raise PreconditionViolation("n and k must be positive")
    if _triangular(k) < n:
        raise PreconditionViolation(f"D_{k}({n}) undefined: k(k+3)/2 = {_triangular(k)} < n")
    return DivisorClass(k, Fraction(-1, 2))


def _binom(a: int, b: int) -> int:
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def divisor_Ek(n: int, k: int) -> DivisorClass:
    if n < 1 or k < 1:
        raise PreconditionViolation("n and k must be positive")
    m = _triangular(k)
    if n <= m:
        raise PreconditionViolation(f"E_{k}({n}) undefined: n <= k(k+3)/2 = {m}")
    return DivisorClass(_binom(n - 1, m) * k, Fraction(-_binom(n - 2, m - 1), 2))


def divisor_interpolation(a: int, r: int) -> DivisorClass:
    """Class of D_E(n) for a rank-r bundle with c1 = aL satisfying interpolation."""
    if a < 1 or r < 1:
        raise PreconditionViolation("a and r must be positive")
    return DivisorClass(a, Fraction(-r, 2))


def ray_normalize(d: DivisorClass) -> DivisorClass:
    if d.is_zero():
        raise ZeroClass("cannot normalize the zero class")
    scale = abs(d.h_coeff) if d.h_coeff else abs(d.b_coeff)
    return DivisorClass(d.h_coeff / scale, d.b_coeff / scale)

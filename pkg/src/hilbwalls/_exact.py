"""Exact helpers: canonical fraction strings and quadratic surds ``a + b*sqrt(D)``.

Wall radii are square roots of rationals, so every comparison involving a
radius goes through :func:`sign_surd` or :func:`sign_two_surds`, which decide
signs by squaring with case analysis. Floating point never enters a decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def frac_str(x: Rational) -> str:
    """Canonical ``"p/q"`` with q > 0 and gcd 1, or ``"p"`` when q = 1."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_surd(a: Rational, b: Rational, d: Rational) -> int:
    """Sign of ``a + b*sqrt(d)`` for rationals with d >= 0."""
    if d < 0:
        raise ValueError("negative radicand")
    sa = _sign(a)
    sb = _sign(b) if d else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger magnitude wins
    return sa * _sign(Fraction(a) ** 2 - Fraction(b) ** 2 * d)


def _sign_difference(sx: int, sy: int, sq: int) -> int:
    """Sign of X - Y given sign(X), sign(Y) and sign(X^2 - Y^2)."""
    if sx >= 0 >= sy:
        return 0 if sx == sy == 0 else 1
    if sx <= 0 <= sy:
        return -1
    return sq if sx > 0 else -sq


def sign_two_surds(a: Rational, b: Rational, p: Rational, c: Rational, q: Rational) -> int:
    """Sign of ``a + b*sqrt(p) + c*sqrt(q)``; p, q >= 0."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if p < 0 or q < 0:
        raise ValueError("negative radicand")
    # X = a + b sqrt(p), Y = -c sqrt(q); want sign(X - Y)
    sx = sign_surd(a, b, p)
    sy = -_sign(c) if q else 0
    # X^2 - Y^2 = a^2 + b^2 p - c^2 q + 2ab sqrt(p)
    sq = sign_surd(a * a + b * b * p - c * c * q, 2 * a * b, p)
    return _sign_difference(sx, sy, sq)


def rational_sqrt(d: Rational) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    d = Fraction(d)
    if d < 0:
        return None
    p, q = d.numerator, d.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


@dataclass(frozen=True)
class Surd:
    """The real number ``a + b*sqrt(d)``."""

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "d", as_fraction(self.d))
        if self.d < 0:
            raise ValueError("negative radicand")

    def sign(self) -> int:
        return sign_surd(self.a, self.b, self.d)

    def compare(self, other) -> int:
        """Sign of ``self - other`` for a rational or another Surd."""
        if isinstance(other, Surd):
            return sign_two_surds(self.a - other.a, self.b, self.d, -other.b, other.d)
        return sign_surd(self.a - as_fraction(other), self.b, self.d)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def scale(self, k: Rational) -> "Surd":
        return Surd(self.a * k, self.b * k, self.d)

    def rational_value(self) -> Fraction | None:
        root = rational_sqrt(self.d)
        if self.b == 0:
            return self.a
        if root is None:
            return None
        return self.a + self.b * root

    def floor(self) -> int:
        guess = math.floor(self.approx(64))
        while self.compare(guess + 1) >= 0:
            guess += 1
        while self.compare(guess) < 0:
            guess -= 1
        return guess

    def ceil(self) -> int:
        f = self.floor()
        return f if self.compare(f) == 0 else f + 1

    def approx(self, bits: int = 53) -> Fraction:
        """Rational approximation with error below 2**-bits times |b|."""
        scale = 1 << bits
        num, den = self.d.numerator, self.d.denominator
        root = Fraction(math.isqrt(num * den * scale * scale), den * scale)
        return self.a + self.b * root

    def __float__(self) -> float:
        return float(self.approx())

    def __str__(self) -> str:
        exact = self.rational_value()
        if exact is not None:
            return frac_str(exact)
        sign = "-" if self.b < 0 else "+"
        coeff = abs(self.b)
        rad = f"sqrt({frac_str(self.d)})"
        body = rad if coeff == 1 else f"{frac_str(coeff)}*{rad}"
        if self.a == 0:
            return body if sign == "+" else f"-{body}"
        return f"{frac_str(self.a)} {sign} {body}"

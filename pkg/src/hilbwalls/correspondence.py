"""The dictionary x = y - 3/2 between Mori wall rays and Bridgeland centers.

A Mori ray is written H + (1/(2y))B with y < 0, so H - (1/(2d))B has
y = -d. This is the only place that sign convention is applied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._exact import Rational, as_fraction
from .cones import TABLE_RANGE, mori_wall_rays
from .errors import NonNegativeInput, OutOfRange, UnsupportedN
from .picard import DivisorClass, ray_normalize
from .walls import wall_list

SHIFT = Fraction(3, 2)


def ray_to_y(ray: DivisorClass) -> Fraction:
    """y with ray = H + (1/(2y))B; the ray must have the form H - alpha B, alpha > 0."""
    alpha = ray_normalize(ray).alpha
    if alpha <= 0:
        raise OutOfRange(f"{ray} is not a wall ray H - alpha B with alpha > 0")
    return -1 / (2 * alpha)


def y_to_ray(y: Rational) -> DivisorClass:
    y = as_fraction(y)
    if y >= 0:
        raise NonNegativeInput(f"y must be negative, got {y}")
    return DivisorClass.ray(-1 / (2 * y))


def mori_to_x(y: Rational) -> Fraction:
    y = as_fraction(y)
    if y >= 0:
        raise NonNegativeInput(f"y must be negative, got {y}")
    return y - SHIFT


def x_to_mori(x: Rational) -> DivisorClass:
    x = as_fraction(x)
    if x + SHIFT >= 0:
        raise OutOfRange(f"x = {x} has no partner ray: need x < -3/2")
    return y_to_ray(x + SHIFT)


@dataclass(frozen=True)
class CorrespondenceReport:
    n: int
    pairs: list[tuple[DivisorClass, Fraction]] = field(default_factory=list)
    unmatched_mori: list[DivisorClass] = field(default_factory=list)
    unmatched_bridgeland: list[Fraction] = field(default_factory=list)

    @property
    def bijection(self) -> bool:
        return not self.unmatched_mori and not self.unmatched_bridgeland


def check_bijection(n: int) -> CorrespondenceReport:
    if n not in TABLE_RANGE:
        raise UnsupportedN(f"the correspondence is only verified for n in 2..9, got {n}")
    rays = mori_wall_rays(n).rays
    centers = [w.center for w in wall_list(n).walls]
    remaining = list(centers)
    pairs, lonely = [], []
    for ray in rays:
        x = mori_to_x(ray_to_y(ray))
        if x in remaining:
            remaining.remove(x)
            pairs.append((ray, x))
        else:
            lonely.append(ray)
    return CorrespondenceReport(n, pairs, lonely, remaining)

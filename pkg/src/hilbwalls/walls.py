"""Bridgeland walls for the ideal sheaf character (1, 0, -n).

Walls are nested semicircles with center x < -sqrt(2n) and radius
sqrt(x^2 - 2n). Rank-one walls come from subsheaves I_W(-k); higher-rank
destabilizers are bounded by a numerical search that rules out (or flags)
everything outside the collapsing wall.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from ._exact import Rational, Surd, as_fraction
from .bridgeland import ChernCharacter, below_ideal_vertex, wall_center_for_ideal
from .errors import InternalInconsistency, PreconditionViolation
from .gaeta import generic_destabilizer_candidates

GOLDEN_RANGE = range(2, 10)


class ResultStatus(enum.Enum):
    EXACT = "exact"
    CANDIDATE = "candidate"


class WitnessStatus(enum.Enum):
    CONFIRMED = "confirmed"
    CANDIDATE = "candidate"
    EXCLUDED = "excluded"
    TRUNCATED = "truncated"


class ExclusionReason(enum.Enum):
    NON_INTEGER_C2 = "NonIntegerC2"
    NO_INTEGER_DEGREE = "NoIntegerDegree"
    BOGOMOLOV_FAIL = "BogomolovFail"
    INSIDE_COLLAPSE = "InsideCollapse"


@dataclass(frozen=True, order=True)
class RankOneWitness:
    """Subsheaf I_W(-k) with W of length lW."""

    k: int
    lW: int

    def __post_init__(self):
        if self.k < 1 or self.lW < 0:
            raise PreconditionViolation(f"bad rank-one witness k={self.k}, lW={self.lW}")

    @property
    def ch(self) -> ChernCharacter:
        return ChernCharacter(1, -self.k, Fraction(self.k * self.k, 2) - self.lW)

    def center(self, n: int) -> Fraction:
        return Fraction(-n, self.k) - Fraction(self.k, 2) + Fraction(self.lW, self.k)


@dataclass(frozen=True)
class HigherRankWitness:
    """A rank >= 2 subobject character (r, c, ch2).

    ``ch`` is a raw triple because excluded records may fail integrality.
    It is None for NoIntegerDegree and truncated records, which concern a
    whole rank; ``degree_bounds`` then holds the open degree interval.
    """

    rank: int
    ch: tuple[Fraction, Fraction, Fraction] | None
    status: WitnessStatus
    reason: ExclusionReason | None = None
    degree_bounds: tuple[Surd, Surd] | None = None

    def __post_init__(self):
        if (self.status is WitnessStatus.EXCLUDED) != (self.reason is not None):
            raise PreconditionViolation("excluded witnesses, and only those, carry a reason")

    def center(self, n: int) -> Fraction | None:
        if self.ch is None:
            return None
        return wall_center_for_ideal(n, self.ch)


WallWitness = Union[RankOneWitness, HigherRankWitness]


@dataclass(frozen=True)
class Wall:
    n: int
    center: Fraction
    radius_sq: Fraction
    witnesses: tuple[WallWitness, ...]
    collapsing: bool = False

    def __post_init__(self):
        if self.radius_sq != self.center * self.center - 2 * self.n or self.radius_sq <= 0:
            raise InternalInconsistency(f"wall at {self.center} has bad radius {self.radius_sq}")
        if not self.witnesses:
            raise InternalInconsistency(f"wall at {self.center} has no witness")
        for w in self.witnesses:
            c = w.center(self.n)
            if c is not None and c != self.center:
                raise InternalInconsistency(f"witness {w} gives center {c}, not {self.center}")


def _make_wall(n: int, center: Fraction, witnesses, collapsing=False) -> Wall:
    return Wall(n, center, center * center - 2 * n, tuple(witnesses), collapsing)


# Collapsing walls and geometrically confirmed higher-rank destabilizers.
_GOLDEN_COLLAPSE = {
    2: Fraction(-5, 2),
    3: Fraction(-5, 2),
    4: Fraction(-3),
    5: Fraction(-7, 2),
    6: Fraction(-7, 2),
    7: Fraction(-39, 10),
    8: Fraction(-25, 6),
    9: Fraction(-9, 2),
}
_GOLDEN_HIGHER = {
    3: [(2, -4, 4), (3, -6, 6)],
    4: [(2, -4, 4)],
    7: [(2, -5, Fraction(11, 2))],
    8: [(2, -6, 9)],
    9: [(2, -6, 9)],
}


def _confirmed(n: int) -> list[HigherRankWitness]:
    return [
        HigherRankWitness(r, (Fraction(r), Fraction(c), Fraction(d)), WitnessStatus.CONFIRMED)
        for r, c, d in _GOLDEN_HIGHER.get(n, [])
    ]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise PreconditionViolation(f"n must be an integer >= 2, got {n!r}")


def rank_one_walls(n: int, x_min: Rational) -> list[Wall]:
    """Rank-one walls with center at or outside ``x_min``, outermost first."""
    _check_n(n)
    x_min = as_fraction(x_min)
    if not below_ideal_vertex(n, x_min) and x_min * x_min != 2 * n:
        raise PreconditionViolation(f"x_min = {x_min} lies right of -sqrt({2 * n})")
    by_center: dict[Fraction, list[RankOneWitness]] = {}
    k = 1
    while k * k <= 2 * n:
        lw = 0
        while True:
            w = RankOneWitness(k, lw)
            x = w.center(n)
            if x > x_min:
                break
            if below_ideal_vertex(n, x):
                by_center.setdefault(x, []).append(w)
            lw += 1
        k += 1
    return [_make_wall(n, x, sorted(ws)) for x, ws in sorted(by_center.items())]


def rank_bound_sq(n: int, r: int) -> Fraction:
    """Square of the largest |x| at which a rank-r subobject can destabilize."""
    return Fraction(n * (2 * r - 1) ** 2, 2 * r * (r - 1))


def degree_bounds(n: int, r: int, x: Rational) -> tuple[Surd, Surd]:
    """(r(x + sqrt(x^2-2n)), (r-1)(x - sqrt(x^2-2n)))."""
    x = as_fraction(x)
    disc = x * x - 2 * n
    return Surd(r * x, r, disc), Surd((r - 1) * x, -(r - 1), disc)


def _half_integers(lo_excl: Fraction, hi_incl: Surd) -> range:
    """Doubled values 2h of half-integers h with lo_excl < h <= hi_incl."""
    start = math.floor(2 * lo_excl) + 1
    stop = hi_incl.scale(2).floor()
    return range(start, stop + 1)


def higher_rank_search(n: int, x_collapse: Rational, max_rank: int | None = None) -> list[HigherRankWitness]:
    """Numerical candidates of rank >= 2 whose wall lies outside ``x_collapse``.

    ``max_rank`` caps the search; ranks the bound would still require are
    reported as truncated records instead of being dropped.
    """
    _check_n(n)
    xc = as_fraction(x_collapse)
    if not below_ideal_vertex(n, xc):
        raise PreconditionViolation(f"x_collapse = {xc} is not left of -sqrt({2 * n})")
    out: list[HigherRankWitness] = []
    r = 2
    while rank_bound_sq(n, r) > xc * xc:
        lo, hi = degree_bounds(n, r, xc)
        if max_rank is not None and r > max_rank:
            out.append(HigherRankWitness(r, None, WitnessStatus.TRUNCATED, degree_bounds=(lo, hi)))
            r += 1
            continue
        d_first, d_last = lo.floor() + 1, hi.ceil() - 1
        if d_first > d_last:
            out.append(
                HigherRankWitness(
                    r, None, WitnessStatus.EXCLUDED, ExclusionReason.NO_INTEGER_DEGREE, (lo, hi)
                )
            )
        m_sq = rank_bound_sq(n, r)
        for d in range(d_first, d_last + 1):
            out.extend(_scan_degree(n, r, d, xc, m_sq))
        r += 1
    return out


def _scan_degree(n: int, r: int, d: int, xc: Fraction, m_sq: Fraction) -> list[HigherRankWitness]:
    found = []
    # center (ch2 + rn)/d with d < 0: outside xc iff ch2 > d*xc - rn,
    # and x >= -M iff ch2 <= -d*M - rn
    edge = d * xc - r * n
    for twice in _half_integers(edge, Surd(-r * n, -d, m_sq)):
        ch2 = Fraction(twice, 2)
        x = (ch2 + r * n) / d
        lo, hi = degree_bounds(n, r, x)
        if lo > d or hi < d:
            continue
        found.append(_classify(r, d, ch2, WitnessStatus.CANDIDATE))
    near = Fraction(math.floor(2 * edge), 2)
    found.append(
        HigherRankWitness(
            r, (Fraction(r), Fraction(d), near), WitnessStatus.EXCLUDED, ExclusionReason.INSIDE_COLLAPSE
        )
    )
    return found


def _classify(r: int, d: int, ch2: Fraction, ok: WitnessStatus) -> HigherRankWitness:
    triple = (Fraction(r), Fraction(d), ch2)
    if (Fraction(d * d, 2) - ch2).denominator != 1:
        return HigherRankWitness(r, triple, WitnessStatus.EXCLUDED, ExclusionReason.NON_INTEGER_C2)
    if d * d - 2 * r * ch2 < 0:
        return HigherRankWitness(r, triple, WitnessStatus.EXCLUDED, ExclusionReason.BOGOMOLOV_FAIL)
    return HigherRankWitness(r, triple, ok)


class CollapsingWall(NamedTuple):
    wall: Wall
    status: ResultStatus


def _gaeta_witness(n: int, ch: ChernCharacter) -> WallWitness:
    if ch.ch0 == 1:
        k = -ch.ch1
        return RankOneWitness(k, int(Fraction(k * k, 2) - ch.ch2))
    return HigherRankWitness(ch.ch0, ch.triple(), WitnessStatus.CANDIDATE)


def _collapse(n: int) -> tuple[Fraction, list[WallWitness], ResultStatus]:
    if n in GOLDEN_RANGE:
        return _GOLDEN_COLLAPSE[n], list(_confirmed(n)), ResultStatus.EXACT
    valid = [c for c in generic_destabilizer_candidates(n) if below_ideal_vertex(n, c.center)]
    if not valid:
        raise InternalInconsistency(f"no generic destabilizer gives a wall for n={n}")
    x = min(c.center for c in valid)
    witnesses = [_gaeta_witness(n, c.ch) for c in valid if c.center == x]
    return x, witnesses, ResultStatus.CANDIDATE


def collapsing_wall(n: int) -> CollapsingWall:
    _check_n(n)
    x, extra, status = _collapse(n)
    rank_one = [w for wall in rank_one_walls(n, x) if wall.center == x for w in wall.witnesses]
    witnesses = _merge_witnesses(rank_one, extra)
    return CollapsingWall(_make_wall(n, x, witnesses, collapsing=True), status)


def _merge_witnesses(first, second) -> list[WallWitness]:
    out = list(first)
    for w in second:
        if w not in out:
            out.append(w)
    ones = sorted(w for w in out if isinstance(w, RankOneWitness))
    rest = [w for w in out if not isinstance(w, RankOneWitness)]
    return ones + rest


class WallList(NamedTuple):
    walls: list[Wall]
    status: ResultStatus
    excluded: list[HigherRankWitness]
    truncated: list[HigherRankWitness]


@lru_cache(maxsize=256)
def wall_list(n: int, max_rank: int | None = None) -> WallList:
    """All walls destabilizing an ideal of n points, outermost first."""
    _check_n(n)
    collapse, status = collapsing_wall(n)
    search = higher_rank_search(n, collapse.center, max_rank)
    excluded = [w for w in search if w.status is WitnessStatus.EXCLUDED]
    truncated = [w for w in search if w.status is WitnessStatus.TRUNCATED]

    by_center: dict[Fraction, list[WallWitness]] = {}
    for wall in rank_one_walls(n, collapse.center):
        by_center[wall.center] = list(wall.witnesses)
    by_center[collapse.center] = _merge_witnesses(by_center.get(collapse.center, []), collapse.witnesses)
    for w in search:
        if w.status is WitnessStatus.CANDIDATE:
            x = w.center(n)
            by_center[x] = _merge_witnesses(by_center.get(x, []), [w])

    walls = []
    for x in sorted(by_center):
        walls.append(_make_wall(n, x, by_center[x], collapsing=(x == collapse.center)))
    return WallList(walls, status, excluded, truncated)


def wall_centers(n: int) -> list[Fraction]:
    return [w.center for w in wall_list(n).walls]


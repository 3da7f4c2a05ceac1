"""Nef cone, effective cone and the stable base locus chambers.

The effective cone edge is computed from the decomposition
n = r(r+1)/2 + s and membership of s/r or 1 - (s+1)/(r+2) in the golden-ratio
set. Chamber tables for n <= 9 are data (``data/chambers.json``).
"""

from __future__ import annotations

import enum
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import NamedTuple

from ._exact import Rational, as_fraction, parse_fraction
from .errors import NegativeInput, OutOfCone, PreconditionViolation, UnsupportedN
from .picard import (
    B,
    H,
    CurveClass,
    DivisorClass,
    conic_pencil,
    diagonal_fiber,
    line_pencil,
    ray_normalize,
)

TABLE_RANGE = range(2, 10)


class Decomposition(NamedTuple):
    n: int
    r: int
    s: int


def decompose_n(n: int) -> Decomposition:
    if n < 1:
        raise PreconditionViolation(f"n must be positive, got {n}")
    # largest r with r(r+1)/2 <= n
    r = (math.isqrt(8 * n + 1) - 1) // 2
    s = n - r * (r + 1) // 2
    return Decomposition(n, r, s)


def fibonacci_ratios(max_den: int) -> list[Fraction]:
    """F_{2k}/F_{2k+1} for every such ratio with denominator <= max_den."""
    out = []
    a, b = 0, 1
    while b <= max_den:
        out.append(Fraction(a, b))
        a, b = a + b, a + 2 * b
    return out


def exceeds_inverse_golden(alpha: Rational) -> bool:
    """alpha > 1/phi, decided by the sign of p^2 + pq - q^2."""
    alpha = as_fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    return p > 0 and p * p + p * q - q * q > 0


def phi_contains(alpha: Rational) -> bool:
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise NegativeInput(f"alpha must be nonnegative, got {alpha}")
    if exceeds_inverse_golden(alpha):
        return True
    return alpha in fibonacci_ratios(alpha.denominator)


def nef_cone(n: int) -> tuple[DivisorClass, DivisorClass]:
    if n < 2:
        raise PreconditionViolation(f"n must be at least 2, got {n}")
    return H, DivisorClass(n - 1, Fraction(-1, 2))


class ConeStatus(enum.Enum):
    EXACT = "exact"
    BOUNDS_ONLY = "bounds_only"


@dataclass(frozen=True)
class ConeResult:
    """``lower_edge`` is the non-B edge (exact or a containment bound);
    ``upper_edge`` is always B. For BoundsOnly results ``inclusion_bounds``
    brackets the unknown slope as (lo, hi) from the nearest exactly known
    neighbours, when those exist within the search window."""

    n: int
    status: ConeStatus
    lower_edge: DivisorClass
    upper_edge: DivisorClass
    provenance: str
    inclusion_bounds: tuple[Fraction | None, Fraction | None] | None = None

    @property
    def alpha(self) -> Fraction:
        return self.lower_edge.alpha


def _clause_one_alpha(r: int, s: int) -> Fraction:
    return Fraction(r, 2 * (r * r - r + s))


def _clause_two_alpha(r: int, s: int) -> Fraction:
    return Fraction(r + 2, 2 * (r * r + r + s - 1))


def _exact_alpha(n: int) -> tuple[Fraction, str] | None:
    _, r, s = decompose_n(n)
    if phi_contains(Fraction(s, r)):
        return _clause_one_alpha(r, s), "clause-1"
    if s >= 1 and phi_contains(1 - Fraction(s + 1, r + 2)):
        return _clause_two_alpha(r, s), "clause-2"
    return None


# Exactly known neighbours are searched this far on each side.
_NEIGHBOUR_WINDOW = 64


def effective_cone(n: int) -> ConeResult:
    if n < 2:
        raise PreconditionViolation(f"n must be at least 2, got {n}")
    exact = _exact_alpha(n)
    if exact is not None:
        alpha, via = exact
        return ConeResult(n, ConeStatus.EXACT, DivisorClass.ray(alpha), B, via)

    _, r, s = decompose_n(n)
    if Fraction(s, r) >= Fraction(1, 2):
        bound, via = _clause_one_alpha(r, s), "cayley-1"
    else:
        bound, via = _clause_two_alpha(r, s), "cayley-2"

    # the cone shrinks as n grows: alpha(n+1) <= alpha(n)
    hi = lo = None
    for m in range(n - 1, max(1, n - _NEIGHBOUR_WINDOW), -1):
        known = _exact_alpha(m)
        if known is not None:
            hi = known[0]
            break
    for m in range(n + 1, n + _NEIGHBOUR_WINDOW):
        known = _exact_alpha(m)
        if known is not None:
            lo = known[0]
            break
    return ConeResult(n, ConeStatus.BOUNDS_ONLY, DivisorClass.ray(bound), B, via, (lo, hi))


# --- base locus descriptors -------------------------------------------------


class AtomKind(enum.Enum):
    B = "B"
    L = "L"
    Q = "Q"


@dataclass(frozen=True)
class LocusAtom:
    """B, or L_k(n) (a collinear length-k subscheme), or Q_k(n) (a length-k
    subscheme on a conic)."""

    kind: AtomKind
    k: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind is not AtomKind.B and not 1 <= self.k <= self.n:
            raise PreconditionViolation(f"atom parameter {self.k} outside 1..{self.n}")

    def __str__(self) -> str:
        if self.kind is AtomKind.B:
            return "B"
        return f"{self.kind.value}_{self.k}({self.n})"

    def contained_in(self, other: "LocusAtom") -> bool:
        if self.kind is AtomKind.B or other.kind is AtomKind.B:
            return self == other
        if self.kind is other.kind:
            return self.k >= other.k
        if self.kind is AtomKind.L:
            # k collinear points plus two more lie on a line pair
            return other.k <= min(self.k + 2, self.n)
        return False


@dataclass(frozen=True)
class BaseLocusDescriptor:
    atoms: frozenset[LocusAtom] = frozenset()
    alias: str | None = None

    @property
    def is_empty(self) -> bool:
        return not self.atoms

    def contains(self, other: "BaseLocusDescriptor") -> bool:
        """Atomwise containment: every atom of ``other`` sits inside an atom of self."""
        return all(any(a.contained_in(b) for b in self.atoms) for a in other.atoms)

    def __str__(self) -> str:
        if not self.atoms:
            return "empty"
        return " u ".join(str(a) for a in sorted(self.atoms, key=lambda a: (a.kind.value, a.k)))

    def __eq__(self, other):
        if not isinstance(other, BaseLocusDescriptor):
            return NotImplemented
        return self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)


EMPTY_LOCUS = BaseLocusDescriptor()

_ATOM_RE = re.compile(r"^([LQ])_(\d+)\((\d+)\)$")
_RAY_RE = re.compile(r"^H\s*-\s*(\d+(?:/\d+)?)\s*B$")
_CURVE_RE = re.compile(r"^(?:C\((\d+)\)|C_(\d+)\((\d+)\)|A_\{2,(\d+)\}\((\d+)\))$")


def parse_locus(text: str, alias: str | None = None) -> BaseLocusDescriptor:
    text = text.strip()
    if text == "empty":
        return EMPTY_LOCUS
    atoms = []
    for part in text.split(" u "):
        part = part.strip()
        if part == "B":
            atoms.append(LocusAtom(AtomKind.B))
            continue
        m = _ATOM_RE.match(part)
        if not m:
            raise ValueError(f"bad locus atom {part!r}")
        atoms.append(LocusAtom(AtomKind(m.group(1)), int(m.group(2)), int(m.group(3))))
    return BaseLocusDescriptor(frozenset(atoms), alias)


def parse_ray(text: str) -> DivisorClass:
    text = text.strip()
    if text == "B":
        return B
    if text == "H":
        return H
    m = _RAY_RE.match(text)
    if not m:
        raise ValueError(f"bad ray {text!r}")
    return DivisorClass.ray(parse_fraction(m.group(1)))


def parse_curve(text: str) -> CurveClass:
    m = _CURVE_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad curve {text!r}")
    fib, r, nr, k, nk = m.groups()
    if fib:
        return diagonal_fiber(int(fib))
    if r:
        return line_pencil(int(nr), int(r))
    return conic_pencil(int(nk), int(k))


@dataclass(frozen=True)
class ChamberRow:
    edge_ray: DivisorClass
    divisor_name: str
    dual_curves: tuple[CurveClass, ...]
    locus_below: BaseLocusDescriptor | None


@dataclass(frozen=True)
class ChamberTable:
    n: int
    rows: tuple[ChamberRow, ...] = field(default_factory=tuple)

    def interior_rays(self) -> list[DivisorClass]:
        """Every listed ray except B and H."""
        return [row.edge_ray for row in self.rows[2:]]


@lru_cache(maxsize=1)
def _raw_tables() -> dict:
    text = resources.files("hilbwalls").joinpath("data/chambers.json").read_text("utf-8")
    return json.loads(text)


@lru_cache(maxsize=None)
def chamber_table(n: int) -> ChamberTable:
    if n not in TABLE_RANGE:
        raise UnsupportedN(f"chamber tables exist only for n in 2..9, got {n}")
    rows = []
    for raw in _raw_tables()["tables"][str(n)]:
        locus = raw["locus_below"]
        rows.append(
            ChamberRow(
                edge_ray=parse_ray(raw["ray"]),
                divisor_name=raw["divisor"],
                dual_curves=tuple(parse_curve(c) for c in raw["dual_curves"]),
                locus_below=None if locus is None else parse_locus(locus, raw.get("locus_alias")),
            )
        )
    return ChamberTable(n, tuple(rows))


class MoriWalls(NamedTuple):
    rays: list[DivisorClass]
    complete: bool


def mori_wall_rays(n: int) -> MoriWalls:
    """Interior wall rays, ordered by increasing alpha. Complete for n <= 9;
    for larger n only the D_k walls are listed."""
    if n < 2:
        raise PreconditionViolation(f"n must be at least 2, got {n}")
    if n in TABLE_RANGE:
        return MoriWalls(chamber_table(n).interior_rays(), True)
    rays = [
        DivisorClass.ray(Fraction(1, 2 * k))
        for k in range(n - 1, 0, -1)
        if n <= k * (k + 3) // 2
    ]
    return MoriWalls(rays, False)


def base_locus_at(n: int, ray: DivisorClass) -> BaseLocusDescriptor:
    """Stable base locus of the chamber containing ``ray``.

    A wall ray H - aB belongs to the chamber on its H side (smaller alpha);
    H itself has empty base locus and B has base locus B.
    """
    if n not in TABLE_RANGE:
        raise UnsupportedN(f"base loci are tabulated only for n in 2..9, got {n}")
    table = chamber_table(n)
    ray = ray_normalize(ray)
    if ray.h_coeff < 0 or (ray.h_coeff == 0 and ray.b_coeff < 0):
        raise OutOfCone(f"{ray} is not effective on the Hilbert scheme of {n} points")
    if ray.h_coeff == 0 or ray.b_coeff > 0:
        return table.rows[0].locus_below
    alpha = ray.alpha
    if alpha == 0:
        return table.rows[1].locus_below
    edges = table.rows[2:]
    if alpha > edges[-1].edge_ray.alpha:
        raise OutOfCone(f"{ray} lies outside the effective cone for n={n}")
    previous = table.rows[1]
    for row in edges:
        if alpha <= row.edge_ray.alpha:
            return previous.locus_below
        previous = row
    raise AssertionError("unreachable")

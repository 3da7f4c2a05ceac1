"""Betti numbers of the minimal free resolution of a generic ideal of n
points in the plane, and the destabilizing subobjects read off from it.

With d minimal such that (d+1)(d+2)/2 > n and a = (d+1)(d+2)/2 - n generators
of degree d, the resolution is one of

    A:  0 -> O(-d-2)^b -> O(-d)^a + O(-d-1)^c -> I_Z -> 0
    B:  0 -> O(-d-1)^c' + O(-d-2)^b -> O(-d)^a -> I_Z -> 0

depending on whether c = d + 2 - 2a is nonnegative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bridgeland import ChernCharacter, wall_center_for_ideal
from .errors import InternalInconsistency, PreconditionViolation


class ResolutionForm(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class GaetaResolution:
    n: int
    d: int
    form: ResolutionForm
    a: int
    c: int  # extra generators of degree d+1 (form A), else 0
    c_prime: int  # relations of degree d+1 (form B), else 0
    b: int  # relations of degree d+2

    def generators(self) -> list[tuple[int, int]]:
        """(twist, multiplicity) of the free module mapping onto I_Z."""
        out = [(-self.d, self.a)]
        if self.c:
            out.append((-self.d - 1, self.c))
        return out

    def relations(self) -> list[tuple[int, int]]:
        out = []
        if self.c_prime:
            out.append((-self.d - 1, self.c_prime))
        if self.b:
            out.append((-self.d - 2, self.b))
        return out

    def chern_character(self) -> ChernCharacter:
        total = ChernCharacter(0, 0, 0)
        for twist, mult in self.generators():
            total = total + ChernCharacter.line_bundle(twist, mult)
        for twist, mult in self.relations():
            total = total - ChernCharacter.line_bundle(twist, mult)
        return total

    def __str__(self) -> str:
        def side(terms):
            if not terms:
                return "0"
            return " + ".join(f"O({t})^{m}" if m != 1 else f"O({t})" for t, m in terms)

        return f"0 -> {side(self.relations())} -> {side(self.generators())} -> I_Z -> 0"


def minimal_degree(n: int) -> int:
    d = 1
    while (d + 1) * (d + 2) // 2 <= n:
        d += 1
    return d


def gaeta_resolution(n: int) -> GaetaResolution:
    if n < 2:
        raise PreconditionViolation(f"n must be at least 2, got {n}")
    d = minimal_degree(n)
    a = (d + 1) * (d + 2) // 2 - n
    c = d + 2 - 2 * a
    if c >= 0:
        res = GaetaResolution(n, d, ResolutionForm.A, a, c, 0, a + c - 1)
    else:
        c_prime = -c
        res = GaetaResolution(n, d, ResolutionForm.B, a, 0, c_prime, a - c_prime - 1)
    if min(res.a, res.c, res.c_prime, res.b) < 0:
        raise InternalInconsistency(f"negative Betti number in {res}")
    if res.chern_character() != ChernCharacter.ideal_sheaf(n):
        raise InternalInconsistency(f"{res} does not have character (1, 0, -{n})")
    return res


class GaetaCandidate(NamedTuple):
    ch: ChernCharacter
    center: Fraction
    origin: str


def generic_destabilizer_candidates(n: int) -> list[GaetaCandidate]:
    """Subobjects of a generic I_Z built from its resolution, with wall centers.

    Only positive-rank, negative-degree characters are kept.
    """
    res = gaeta_resolution(n)
    d, a = res.d, res.a
    base = ChernCharacter.line_bundle(-d, a)
    found: list[GaetaCandidate] = [GaetaCandidate(base, wall_center_for_ideal(n, base), "generators")]
    if res.form is ResolutionForm.B:
        for j in range(1, res.c_prime + 1):
            ch = base - ChernCharacter.line_bundle(-d - 1, j)
            if ch.ch0 > 0 and ch.ch1 < 0:
                found.append(GaetaCandidate(ch, wall_center_for_ideal(n, ch), f"cokernel-{j}"))
    else:
        top = base + ChernCharacter.line_bundle(-d - 1, res.c)
        for j in range(0, res.b + 1):
            ch = top - ChernCharacter.line_bundle(-d - 2, j)
            if ch.ch0 > 0 and ch.ch1 < 0:
                found.append(GaetaCandidate(ch, wall_center_for_ideal(n, ch), f"syzygy-quotient-{j}"))
    return found

"""Deterministic SVG wall diagrams.

Radii are irrational in general, so geometry attributes are decimals with
12 significant digits computed by :mod:`decimal`. These numbers are for
drawing only and never flow back into any computation.
"""

from __future__ import annotations

import math
from decimal import Context, Decimal
from fractions import Fraction

from ._exact import frac_str
from .quiver import regions_meeting_wall
from .walls import Wall

DIGITS = 12
PX_PER_UNIT = 60
_CTX = Context(prec=DIGITS)


def _dec(x) -> Decimal:
    if isinstance(x, Decimal):
        return _CTX.plus(x)
    x = Fraction(x)
    return _CTX.divide(Decimal(x.numerator), Decimal(x.denominator))


def _sqrt(x: Fraction) -> Decimal:
    return _CTX.sqrt(_dec(x))


def _num(d: Decimal) -> str:
    text = format(_CTX.plus(d), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


class _Frame:
    """Maps (s, t) to pixel coordinates with t pointing up."""

    def __init__(self, s_min: Decimal, t_max: Decimal):
        self.s_min = s_min
        self.t_max = t_max
        self.width = _CTX.multiply(_CTX.minus(s_min), PX_PER_UNIT)
        self.height = _CTX.multiply(t_max, PX_PER_UNIT)

    def x(self, s) -> Decimal:
        return _CTX.multiply(_CTX.subtract(_dec(s), _dec(self.s_min)), PX_PER_UNIT)

    def y(self, t) -> Decimal:
        return _CTX.multiply(_CTX.subtract(self.t_max, _dec(t)), PX_PER_UNIT)


def _arc(frame: _Frame, center: Fraction, radius: Decimal, css: str, label: str | None) -> str:
    left = _CTX.subtract(_dec(center), radius)
    right = _CTX.add(_dec(center), radius)
    r_px = _num(_CTX.multiply(radius, PX_PER_UNIT))
    y0 = _num(frame.y(0))
    d = f"M {_num(frame.x(left))} {y0} A {r_px} {r_px} 0 0 1 {_num(frame.x(right))} {y0}"
    attr = f' data-center="{label}"' if label else ""
    return f'  <path class="{css}"{attr} d="{d}" fill="none"/>'


def render_walls(n: int, walls: list[Wall], quiver_regions: bool = False) -> str:
    outer = walls[0]
    radius = _sqrt(outer.radius_sq)
    s_min = _CTX.subtract(_CTX.subtract(_dec(outer.center), radius), Decimal("0.5"))
    t_max = _CTX.add(radius, Decimal("0.5"))
    frame = _Frame(s_min, t_max)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_num(frame.width)} {_num(frame.height)}"'
        f' width="{_num(frame.width)}" height="{_num(frame.height)}">',
        f"  <title>Bridgeland walls for ideal sheaves of {n} points</title>",
        '  <g class="axes" stroke="black" stroke-width="1">',
        f'    <line x1="0" y1="{_num(frame.y(0))}" x2="{_num(frame.width)}" y2="{_num(frame.y(0))}"/>',
        "  </g>",
        f'  <text class="axis-label" x="{_num(frame.width - 12)}" y="{_num(frame.y(0) - 4)}">s</text>',
    ]
    for s in range(math.ceil(s_min), 1):
        lines.append(
            f'  <text class="tick" x="{_num(frame.x(s))}" y="{_num(frame.y(0) - 4)}"'
            f' text-anchor="middle" font-size="9">{s}</text>'
        )
    if quiver_regions:
        ks = sorted({k for w in walls for k in regions_meeting_wall(w)})
        for k in ks:
            lines.append(_arc(frame, Fraction(k - 1), Decimal(1), "quiver-region", f"k={k}"))
    lines.append('  <g class="walls" stroke="blue" stroke-width="1.5">')
    for w in walls:
        lines.append("  " + _arc(frame, w.center, _sqrt(w.radius_sq), "wall", frac_str(w.center)))
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

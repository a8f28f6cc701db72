"""Deterministic SVG rendering of a two-variable walk trace.

Draws the nonnegative quadrant with one shaded sector per visited Groebner
cone (bounded by its extreme rays), a ray for each crossing direction, and a
dot per intermediate weight vector, all normalized to unit directions inside
a fixed 512x512 viewport.  Output bytes depend only on the input.
"""

from __future__ import annotations

import math
from pathlib import Path

from .errors import GwalkError
from .walk import ConeInequalities, WalkTrace, cone_inequalities

__all__ = ["fan_svg", "render_fan"]

_SIZE = 512
_MARGIN = 48.0
_RADIUS = _SIZE - 2 * _MARGIN
_DOT_RADIUS = 0.62 * _RADIUS


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _sector_rays(ineqs: ConeInequalities):
    """Extreme rays of the cone clipped to the nonnegative quadrant."""
    constraints = list(ineqs.vectors) + [(1, 0), (0, 1)]
    candidates = {(1, 0), (0, 1)}
    for v in ineqs.vectors:
        candidates.add((v[1], -v[0]))
        candidates.add((-v[1], v[0]))
    rays = []
    for d in candidates:
        if d == (0, 0) or d[0] < 0 or d[1] < 0:
            continue
        if all(c[0] * d[0] + c[1] * d[1] >= 0 for c in constraints):
            g = math.gcd(abs(d[0]), abs(d[1]))
            rays.append((d[0] // g, d[1] // g))
    rays = sorted(set(rays))
    rays.sort(key=lambda d: (0.0 if d[0] == 0 and d[1] == 0 else math.atan2(d[1], d[0])))
    if len(rays) < 2:
        return rays
    return [rays[0], rays[-1]]


def _unit(v):
    norm = math.sqrt(v[0] * v[0] + v[1] * v[1])
    return (v[0] / norm, v[1] / norm)


def _place(u, radius):
    return (_MARGIN + radius * u[0], _SIZE - _MARGIN - radius * u[1])


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_fan(trace: WalkTrace, bases) -> str:
    """Render the trace to SVG text; see fan_svg for the file variant."""
    if trace.algorithm != "standard_walk":
        raise GwalkError("fan rendering needs a standard-walk trace")
    if not trace.crossed:
        raise GwalkError("empty trace")
    bases = list(bases)
    if len(bases) != len(trace.crossed):
        raise GwalkError(
            f"{len(bases)} bases for {len(trace.crossed)} trace weights"
        )
    if bases[0].ring.n != 2:
        raise GwalkError("fan rendering is only available for 2 variables")

    origin = _place((0.0, 0.0), 0.0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="#ffffff"/>',
    ]

    # quadrant axes
    xaxis = _place((1.0, 0.0), _RADIUS)
    yaxis = _place((0.0, 1.0), _RADIUS)
    for end in (xaxis, yaxis):
        out.append(
            f'<line x1="{_fmt(origin[0])}" y1="{_fmt(origin[1])}" '
            f'x2="{_fmt(end[0])}" y2="{_fmt(end[1])}" '
            'stroke="#222222" stroke-width="1.5"/>'
        )

    count = len(bases)
    for idx, basis in enumerate(bases):
        rays = _sector_rays(cone_inequalities(basis))
        if len(rays) < 2:
            continue
        p1 = _place(_unit(rays[0]), _RADIUS)
        p2 = _place(_unit(rays[1]), _RADIUS)
        opacity = 0.12 + 0.5 * (idx + 1) / count
        out.append(
            f'<path d="M {_fmt(origin[0])} {_fmt(origin[1])} '
            f'L {_fmt(p1[0])} {_fmt(p1[1])} '
            f'A {_fmt(_RADIUS)} {_fmt(_RADIUS)} 0 0 0 {_fmt(p2[0])} {_fmt(p2[1])} Z" '
            f'fill="#5b7fbd" fill-opacity="{_fmt(opacity)}" stroke="#39507a" '
            'stroke-width="0.8"/>'
        )

    for weight in trace.crossed:
        end = _place(_unit(weight), _RADIUS)
        out.append(
            f'<line x1="{_fmt(origin[0])}" y1="{_fmt(origin[1])}" '
            f'x2="{_fmt(end[0])}" y2="{_fmt(end[1])}" '
            'stroke="#b03030" stroke-width="1.0" stroke-dasharray="5,3"/>'
        )

    for weight in trace.crossed:
        dot = _place(_unit(weight), _DOT_RADIUS)
        label = "[" + ", ".join(str(x) for x in weight) + "]"
        out.append(
            f'<circle cx="{_fmt(dot[0])}" cy="{_fmt(dot[1])}" r="4.0" '
            'fill="#b03030"/>'
        )
        out.append(
            f'<text x="{_fmt(dot[0] + 8.0)}" y="{_fmt(dot[1] - 6.0)}" '
            f'font-family="monospace" font-size="13" fill="#222222">{label}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def fan_svg(trace: WalkTrace, bases, out_path) -> Path:
    """Write the rendered fan to `out_path` and return the path."""
    path = Path(out_path)
    path.write_text(render_fan(trace, bases))
    return path

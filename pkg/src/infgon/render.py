"""SVG disk pictures of a window of a diagonal set.

Limit points sit equally spaced on the circle; vertex ``(i, k)`` is drawn at
angle ``2*pi*(i + sigma(k))/N`` with ``sigma(k) = 1/2 + arctan(0.35 k)/pi``,
so each arc is squeezed into the gap between its two limit points and the
ticks visibly accumulate towards them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclic import Vertex
from .diagonals import DiagonalSet, truncate_window

SIZE = 400
RADIUS = 160.0
TICK = 6.0


@dataclass(frozen=True)
class RenderSpec:
    window: int = 8
    size: int = SIZE
    radius: float = RADIUS


def sigma(k: int) -> float:
    return 0.5 + math.atan(0.35 * k) / math.pi


def vertex_angle(v: Vertex, N: int) -> float:
    return 2 * math.pi * (v.arc + sigma(v.pos)) / N


def limit_angle(i: int, N: int) -> float:
    return 2 * math.pi * i / N


def _f(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _point(angle: float, r: float, c: float):
    # anticlockwise in the picture: y grows downwards in SVG
    return c + r * math.cos(angle), c - r * math.sin(angle)


def render_svg(S: DiagonalSet, spec: RenderSpec = RenderSpec()) -> str:
    N = S.model.limit_count
    W = spec.window
    c = spec.size / 2
    r = spec.radius
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.size}" '
        f'height="{spec.size}" viewBox="0 0 {spec.size} {spec.size}">',
        f'<circle class="boundary" cx="{_f(c)}" cy="{_f(c)}" r="{_f(r)}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for arc in range(N):
        for k in range(-W, W + 1):
            a = vertex_angle(Vertex(arc, k), N)
            x0, y0 = _point(a, r, c)
            x1, y1 = _point(a, r + TICK, c)
            out.append(f'<line class="tick" x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" '
                       f'y2="{_f(y1)}" stroke="black" stroke-width="0.5"/>')
    for d in truncate_window(S, W):
        a0, a1 = vertex_angle(d.x0, N), vertex_angle(d.x1, N)
        x0, y0 = _point(a0, r, c)
        x1, y1 = _point(a1, r, c)
        # pull the control point towards the centre so chords bow inwards
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        qx, qy = c + 0.5 * (mx - c), c + 0.5 * (my - c)
        out.append(f'<path class="chord" d="M {_f(x0)} {_f(y0)} Q {_f(qx)} {_f(qy)} '
                   f'{_f(x1)} {_f(y1)}" fill="none" stroke="steelblue" stroke-width="1"/>')
    for i in range(N):
        x, y = _point(limit_angle(i, N), r, c)
        out.append(f'<circle class="limit-point" cx="{_f(x)}" cy="{_f(y)}" r="4" '
                   'fill="white" stroke="black" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(S: DiagonalSet, path, spec: RenderSpec = RenderSpec()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(S, spec))

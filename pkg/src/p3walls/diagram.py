"""Standalone SVG pictures of the (beta, alpha) half plane.

This is the one corner of the library where floating point is allowed: all
geometry is sampled on exact rational grids and only the final screen
coordinates are rounded, at a fixed six decimals, so identical inputs yield
byte-identical SVG.  Output is pure ASCII.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .chern import AnyCharacter
from .errors import DegenerateWindowError
from .rationals import as_fraction, ceil_div_fraction, floor_div_fraction
from .tilt import (
    Branch,
    Empty,
    Everywhere,
    HalfPlanePoint,
    Hyperbola,
    Semicircle,
    Vertical,
    VerticalLine,
    WallLocus,
    hyperbola_of,
)

WIDTH = 800
HEIGHT = 500
MARGIN_LEFT = 50
MARGIN_RIGHT = 20
MARGIN_TOP = 20
MARGIN_BOTTOM = 40
SAMPLES = 160


@dataclass(frozen=True)
class DiagramWindow:
    """Visible region: beta in [beta_min, beta_max], alpha in [0, alpha_max]."""

    beta_min: Fraction
    beta_max: Fraction
    alpha_max: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta_min", as_fraction(self.beta_min))
        object.__setattr__(self, "beta_max", as_fraction(self.beta_max))
        object.__setattr__(self, "alpha_max", as_fraction(self.alpha_max))
        if self.beta_min >= self.beta_max or self.alpha_max <= 0:
            raise DegenerateWindowError(
                "window must satisfy beta_min < beta_max and alpha_max > 0"
            )

    @classmethod
    def parse(cls, text: str) -> "DiagramWindow":
        from .rationals import parse_rational_tuple

        return cls(*parse_rational_tuple(text, 3))


class _Mapper:
    def __init__(self, window: DiagramWindow):
        self.window = window
        span_b = float(window.beta_max - window.beta_min)
        span_a = float(window.alpha_max)
        self.sx = (WIDTH - MARGIN_LEFT - MARGIN_RIGHT) / span_b
        self.sy = (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) / span_a
        self.x0 = MARGIN_LEFT - float(window.beta_min) * self.sx
        self.y0 = float(HEIGHT - MARGIN_BOTTOM)

    def x(self, beta: float) -> float:
        return self.sx * beta + self.x0

    def y(self, alpha: float) -> float:
        return self.y0 - self.sy * alpha

    def comment(self) -> str:
        return (
            f"<!-- data-to-screen: x = {self.sx:.6f}*beta + {self.x0:.6f}; "
            f"y = {-self.sy:.6f}*alpha + {self.y0:.6f} -->"
        )


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    # normalize negative zero for byte stability
    return "0.000000" if out == "-0.000000" else out


def _polyline_points(m: _Mapper, pts: Sequence[tuple[float, float]]) -> str:
    return " ".join(f"{_fmt(m.x(b))},{_fmt(m.y(a))}" for b, a in pts)


def _path_from_runs(m: _Mapper, runs: Sequence[Sequence[tuple[float, float]]]) -> str:
    chunks = []
    for run in runs:
        if len(run) < 2:
            continue
        coords = [f"{_fmt(m.x(b))} {_fmt(m.y(a))}" for b, a in run]
        chunks.append("M " + " L ".join(coords))
    return " ".join(chunks)


def _visible_runs(
    pts: Iterable[Optional[tuple[float, float]]]
) -> list[list[tuple[float, float]]]:
    runs: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    for p in pts:
        if p is None:
            if len(current) >= 2:
                runs.append(current)
            current = []
        else:
            current.append(p)
    if len(current) >= 2:
        runs.append(current)
    return runs


def _sample_semicircle(
    w: Semicircle, window: DiagramWindow
) -> list[Optional[tuple[float, float]]]:
    c = float(w.center)
    r = math.sqrt(float(w.radius_sq))
    lo = max(float(window.beta_min), c - r)
    hi = min(float(window.beta_max), c + r)
    if lo >= hi:
        return []
    amax = float(window.alpha_max)
    pts: list[Optional[tuple[float, float]]] = []
    for k in range(SAMPLES + 1):
        b = lo + (hi - lo) * k / SAMPLES
        a_sq = float(w.radius_sq) - (b - c) ** 2
        a = math.sqrt(a_sq) if a_sq > 0 else 0.0
        pts.append((b, a) if a <= amax else None)
    return pts


def _sample_vertical(beta: Fraction, window: DiagramWindow):
    if not (window.beta_min <= beta <= window.beta_max):
        return []
    b = float(beta)
    return [(b, 0.0), (b, float(window.alpha_max))]


def _wall_path(
    w: WallLocus,
    window: DiagramWindow,
    m: _Mapper,
    css_class: str,
    stroke: str,
    stroke_width: str,
    dashed: bool,
) -> Optional[str]:
    """One <path> per locus; None when entirely offscreen or shapeless."""
    if isinstance(w, Semicircle):
        runs = _visible_runs(_sample_semicircle(w, window))
    elif isinstance(w, Vertical):
        seg = _sample_vertical(w.beta, window)
        runs = [seg] if seg else []
    else:
        return None
    d = _path_from_runs(m, runs)
    if not d:
        return None
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    return (
        f'<path class="{css_class}" d="{d}" fill="none" stroke="{stroke}" '
        f'stroke-width="{stroke_width}"{dash}/>'
    )


def _sample_hyperbola(h: Hyperbola, window: DiagramWindow):
    amax = float(window.alpha_max)
    bmin, bmax = float(window.beta_min), float(window.beta_max)
    pts: list[Optional[tuple[float, float]]] = []
    if isinstance(h, VerticalLine):
        return _sample_vertical(h.beta, window)
    c = float(h.center)
    level = float(h.level)
    if level >= 0:
        # left branch, parametrized by height
        for k in range(SAMPLES + 1):
            a = amax * k / SAMPLES
            b = c - math.sqrt(level + a * a)
            pts.append((b, a) if bmin <= b <= bmax else None)
    else:
        # no real vertex gap: single curve over the window
        for k in range(SAMPLES + 1):
            b = bmin + (bmax - bmin) * k / SAMPLES
            a = math.sqrt((b - c) ** 2 - level)
            pts.append((b, a) if a <= amax else None)
    return pts


def _axes(window: DiagramWindow, m: _Mapper) -> list[str]:
    parts = []
    x_left = _fmt(m.x(float(window.beta_min)))
    x_right = _fmt(m.x(float(window.beta_max)))
    y_bottom = _fmt(m.y(0.0))
    y_top = _fmt(m.y(float(window.alpha_max)))
    parts.append(
        f'<line class="axis" x1="{x_left}" y1="{y_bottom}" x2="{x_right}" '
        f'y2="{y_bottom}" stroke="currentColor"/>'
    )
    parts.append(
        f'<line class="axis" x1="{x_left}" y1="{y_bottom}" x2="{x_left}" '
        f'y2="{y_top}" stroke="currentColor"/>'
    )
    b_step = max(1, ceil_div_fraction((window.beta_max - window.beta_min) / 12))
    for b in range(
        ceil_div_fraction(window.beta_min), floor_div_fraction(window.beta_max) + 1
    ):
        if b % b_step != 0:
            continue
        x = _fmt(m.x(float(b)))
        parts.append(
            f'<line class="tick" x1="{x}" y1="{m.y0:.6f}" x2="{x}" '
            f'y2="{m.y0 + 5:.6f}" stroke="currentColor"/>'
        )
        parts.append(
            f'<text class="tick-label" x="{x}" y="{m.y0 + 18:.6f}" '
            f'font-size="11" text-anchor="middle">{b}</text>'
        )
    a_step = max(1, ceil_div_fraction(window.alpha_max / 8))
    for a in range(0, floor_div_fraction(window.alpha_max) + 1, a_step):
        y = _fmt(m.y(float(a)))
        x = _fmt(m.x(float(window.beta_min)))
        parts.append(
            f'<line class="tick" x1="{float(x) - 5:.6f}" y1="{y}" x2="{x}" '
            f'y2="{y}" stroke="currentColor"/>'
        )
        parts.append(
            f'<text class="tick-label" x="{float(x) - 8:.6f}" y="{y}" '
            f'font-size="11" text-anchor="end" dominant-baseline="middle">{a}</text>'
        )
    parts.append(
        f'<text class="axis-label" x="{_fmt((m.x(float(window.beta_min)) + m.x(float(window.beta_max))) / 2)}" '
        f'y="{HEIGHT - 6:.6f}" font-size="12" text-anchor="middle">beta</text>'
    )
    parts.append(
        f'<text class="axis-label" x="14.000000" y="{_fmt(m.y(float(window.alpha_max) / 2))}" '
        f'font-size="12" text-anchor="middle" transform="rotate(-90 14 '
        f'{_fmt(m.y(float(window.alpha_max) / 2))})">alpha</text>'
    )
    return parts


def render_wall_diagram(
    v: AnyCharacter,
    window: DiagramWindow,
    *,
    walls: Sequence[WallLocus] = (),
    bmt_null: Optional[WallLocus] = None,
    path: Sequence[HalfPlanePoint] = (),
) -> str:
    """Render the beta-axis, the degeneracy branch of v, solid wall arcs, an
    optional dashed null-locus arc, and an optional path polyline.

    Walls entirely outside the window are dropped; arcs taller than the
    window are clipped into subpaths of a single path element."""
    m = _Mapper(window)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="monospace">',
        m.comment(),
    ]
    parts.extend(_axes(window, m))

    hyper = hyperbola_of(v)
    runs = _visible_runs(_sample_hyperbola(hyper, window))
    if runs:
        # the branch is monotone within the window, so one run suffices
        pts = max(runs, key=len)
        parts.append(
            f'<polyline class="hyperbola" points="{_polyline_points(m, pts)}" '
            f'fill="none" stroke="#c96a11" stroke-width="1.5"/>'
        )

    for w in walls:
        el = _wall_path(w, window, m, "wall", "#b02222", "1.5", dashed=False)
        if el is not None:
            parts.append(el)

    if bmt_null is not None and not isinstance(bmt_null, (Everywhere, Empty)):
        el = _wall_path(bmt_null, window, m, "bmt-null", "#333388", "1.2", dashed=True)
        if el is not None:
            parts.append(el)

    if path:
        pts = [
            (float(p.beta), math.sqrt(float(p.alpha_sq)))
            for p in path
            if window.beta_min <= p.beta <= window.beta_max
        ]
        if len(pts) >= 2:
            parts.append(
                f'<polyline class="path-overlay" points="{_polyline_points(m, pts)}" '
                f'fill="none" stroke="#1c7a33" stroke-width="1.2" stroke-dasharray="2 3"/>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Deterministic SVG rendering of strip windows.

Upper marked point i is drawn at x = i, lower marked point j at x = -j; a
window [lo, hi] shows the marked points with indices in the window on both
lines.  Arcs bow into the strip as quadratic curves; the bend is cosmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import Arc, CONNECTING, LOWER, UPPER
from .triangulation import TriangulationDesc

MARGIN = 24
STRIP_HEIGHT = 160


@dataclass(frozen=True)
class RenderSpec:
    window: tuple[int, int]
    unit: int = 40
    highlights: tuple[Arc, ...] = ()
    labels: bool = True

    def __post_init__(self) -> None:
        if self.window[0] > self.window[1]:
            raise ValueError("render window needs lo <= hi")
        if self.unit <= 0:
            raise ValueError("render unit must be positive")


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def render_svg(desc: TriangulationDesc, spec: RenderSpec) -> str:
    lo, hi = spec.window
    unit = spec.unit
    width = (hi - lo) * unit + 2 * MARGIN
    y_top = MARGIN
    y_bot = MARGIN + STRIP_HEIGHT
    height = y_bot + MARGIN

    def x_of(t: int) -> float:
        return MARGIN + (t - lo) * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<style>.bnd{stroke:#333;stroke-width:1.5}.arc{stroke:#4466aa;stroke-width:1.5;fill:none}'
        ".hl{stroke:#cc3322;stroke-width:2.5;fill:none}.pt{fill:#222}"
        ".lab{font:10px sans-serif;fill:#555}</style>",
        f'<line class="bnd" x1="0" y1="{y_top}" x2="{width}" y2="{y_top}"/>',
        f'<line class="bnd" x1="0" y1="{y_bot}" x2="{width}" y2="{y_bot}"/>',
    ]
    for t in range(lo, hi + 1):
        parts.append(f'<circle class="pt" cx="{_fmt(x_of(t))}" cy="{y_top}" r="3"/>')
        parts.append(f'<circle class="pt" cx="{_fmt(x_of(t))}" cy="{y_bot}" r="3"/>')
        if spec.labels:
            parts.append(
                f'<text class="lab" x="{_fmt(x_of(t))}" y="{y_top - 8}" text-anchor="middle">l{t}</text>'
            )
            parts.append(
                f'<text class="lab" x="{_fmt(x_of(t))}" y="{y_bot + 16}" text-anchor="middle">r{-t}</text>'
            )

    hl = set(spec.highlights)
    for u in sorted(desc.members_in_window(lo, hi)):
        parts.append(_arc_path(u, x_of, y_top, y_bot, "hl" if u in hl else "arc"))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _arc_path(u: Arc, x_of, y_top: float, y_bot: float, cls: str) -> str:
    if u.kind == UPPER:
        x1, y1 = x_of(u.i), y_top
        x2, y2 = x_of(u.j), y_top
        depth = min(0.9 * (y_bot - y_top), 14.0 * (u.j - u.i))
        cx, cy = (x1 + x2) / 2, y_top + depth
    elif u.kind == LOWER:
        x1, y1 = x_of(-u.i), y_bot
        x2, y2 = x_of(-u.j), y_bot
        depth = min(0.9 * (y_bot - y_top), 14.0 * (u.i - u.j))
        cx, cy = (x1 + x2) / 2, y_bot - depth
    else:
        x1, y1 = x_of(u.i), y_top
        x2, y2 = x_of(-u.j), y_bot
        cx, cy = (x1 + x2) / 2, (y_top + y_bot) / 2
    return (
        f'<path class="{cls}" d="M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cx)} {_fmt(cy)} '
        f'{_fmt(x2)} {_fmt(y2)}"><title>{u}</title></path>'
    )

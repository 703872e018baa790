"""SVG export of chains as dense polyline paths with optional overlays."""

import math
from dataclasses import dataclass

from .hermite import Segment
from .chain import Chain, end_tangent
from .errors import SingularCurvature
from .sampling import sample_polyline


@dataclass(frozen=True)
class SvgStyle:
    stroke: str = "#1a1a1a"
    stroke_width_frac: float = 0.004   # of the bounding-box diagonal
    show_control_points: bool = False
    show_tangents: bool = False
    show_joints: bool = False
    margin_frac: float = 0.05
    chord_tol_frac: float = 1e-3       # of the bounding-box diagonal


def _fmt(x):
    return f"{x:.6g}"


def export_svg(target, style=SvgStyle()):
    """Vector document for a chain or segment: one polyline path per
    segment plus optional control-point, tangent-arrow and joint markers.

    Coordinates are emitted y-flipped so world +y points up on screen.
    """
    if isinstance(target, Segment):
        target = Chain.start(target)
    if len(target.segments) == 0:
        return ('<svg xmlns="http://www.w3.org/2000/svg" '
                'viewBox="0 0 1 1"></svg>\n')

    coarse = []
    for seg in target.segments:
        coarse.extend(sample_polyline(seg, n=16))
    xs = [p.x for p in coarse]
    ys = [p.y for p in coarse]
    diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    tol = style.chord_tol_frac * diag

    polylines = [sample_polyline(seg, chord_tol=tol)
                 for seg in target.segments]
    xs = [p.x for line in polylines for p in line]
    ys = [p.y for line in polylines for p in line]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = style.margin_frac * diag
    width = (x1 - x0) + 2 * pad or 1.0
    height = (y1 - y0) + 2 * pad or 1.0
    sw = style.stroke_width_frac * diag

    def pt(p):
        # y-flip into the SVG down-positive frame
        return f"{_fmt(p.x)},{_fmt(-p.y)}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0 - pad)} {_fmt(-y1 - pad)} '
        f'{_fmt(width)} {_fmt(height)}">'
    ]
    for line in polylines:
        d = "M " + " L ".join(pt(p) for p in line)
        parts.append(f'<path d="{d}" fill="none" stroke="{style.stroke}" '
                     f'stroke-width="{_fmt(sw)}"/>')
    if style.show_control_points:
        for seg in target.segments:
            if seg.problem is None:
                continue
            for p, color in ((seg.problem.A, "#d62728"),
                             (seg.problem.C, "#d62728")):
                parts.append(f'<circle cx="{_fmt(p.x)}" cy="{_fmt(-p.y)}" '
                             f'r="{_fmt(2.5 * sw)}" fill="{color}"/>')
    if style.show_tangents:
        for seg in target.segments:
            try:
                v = end_tangent(seg)
            except SingularCurvature:
                continue
            p = seg.point(1.0)
            q = p + v
            parts.append(
                f'<line x1="{_fmt(p.x)}" y1="{_fmt(-p.y)}" '
                f'x2="{_fmt(q.x)}" y2="{_fmt(-q.y)}" '
                f'stroke="#d62728" stroke-width="{_fmt(0.7 * sw)}"/>')
    if style.show_joints:
        for j in target.joints:
            parts.append(f'<circle cx="{_fmt(j.point.x)}" '
                         f'cy="{_fmt(-j.point.y)}" r="{_fmt(3 * sw)}" '
                         f'fill="none" stroke="#2ca02c" '
                         f'stroke-width="{_fmt(0.7 * sw)}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

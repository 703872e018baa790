"""Polyline sampling and SVG export."""

import math

import pytest

from lacurves import (
    Chain,
    HermiteProblem,
    Vec2,
    append_g2,
    export_svg,
    sample_polyline,
    solve_g1,
)
from lacurves.svgout import SvgStyle

from synth import synth_problem


def vec_deg(deg, length=1.0):
    return Vec2(length * math.cos(math.radians(deg)),
                length * math.sin(math.radians(deg)))


def arc_segment():
    prob = HermiteProblem(Vec2(0, 0), Vec2(2, 0), vec_deg(45), vec_deg(-45))
    return solve_g1(prob, 0.0)


def test_count_mode_on_circle():
    seg = arc_segment()
    pts = sample_polyline(seg, n=4)
    assert len(pts) == 5
    center = Vec2(1.0, -(2.0 - 1.0) ** 0.5 + 0.0)
    center = Vec2(1.0, 0.0 - (2 - 1) ** 0.5)
    for p in pts:
        assert math.hypot(p.x - 1.0, p.y - center.y) == \
            pytest.approx(math.sqrt(2), abs=1e-9)


def test_cusp_sample_forced():
    prob, _ = synth_problem(1.66, 1.4 / 0.66, 1.0, "within")
    seg = solve_g1(prob, 1.66)
    assert seg.contains_cusp
    t_star = seg.interior_feature_t()
    cusp_pt = seg.point(t_star)
    pts = sample_polyline(seg, n=7)
    hits = [p for p in pts if (p - cusp_pt).norm() < 1e-12]
    assert len(hits) == 1


def test_chord_tolerance_refines():
    seg = arc_segment()
    few = len(sample_polyline(seg, chord_tol=1e-2))
    many = len(sample_polyline(seg, chord_tol=2.5e-3))
    assert 3 <= few < many


def test_chord_deviation_halves():
    seg = arc_segment()

    def max_dev(tol):
        pts = sample_polyline(seg, chord_tol=tol)
        # circle of radius sqrt(2): sagitta of a chord c is r - sqrt(r^2-(c/2)^2)
        r = math.sqrt(2)
        worst = 0.0
        for a, b in zip(pts[:-1], pts[1:]):
            c = (b - a).norm()
            worst = max(worst, r - math.sqrt(max(r * r - (c / 2) ** 2, 0.0)))
        return worst

    d1 = max_dev(2e-2)
    d2 = max_dev(1e-2)
    assert d1 <= 2e-2 + 1e-12
    assert d2 <= 1e-2 + 1e-12
    assert d2 <= d1


def test_chain_sampling_joins_once():
    seg = arc_segment()
    ch = Chain.start(seg)
    ch = append_g2(ch, Vec2(2.0, -2.0), vec_deg(-135))
    pts = sample_polyline(ch, n=8)
    assert len(pts) == 17  # 9 + 9 - shared joint


def test_svg_empty_and_arc():
    empty = export_svg(Chain())
    assert empty.startswith("<svg") and "</svg>" in empty

    seg = arc_segment()
    svg = export_svg(seg)
    assert "<path" in svg and "nan" not in svg.lower()
    # bounding box: arc spans x in [0,2], y in [0, sqrt(2)-1]
    y_top = math.sqrt(2) - 1.0
    assert 'viewBox="' in svg
    vb = svg.split('viewBox="')[1].split('"')[0]
    x0, y0, w, h = (float(v) for v in vb.split())
    pad_x = 0.05 * math.hypot(2.0, y_top)
    assert x0 == pytest.approx(0.0 - pad_x, abs=1e-3)
    assert w == pytest.approx(2.0 + 2 * pad_x, abs=1e-2)
    assert h == pytest.approx(y_top + 2 * pad_x, abs=1e-2)


def test_svg_overlays_present():
    seg = arc_segment()
    ch = Chain.start(seg)
    ch = append_g2(ch, Vec2(2.0, -2.0), vec_deg(-135))
    svg = export_svg(ch, SvgStyle(show_control_points=True,
                                  show_tangents=True, show_joints=True))
    assert svg.count("<circle") >= 3
    assert "<line" in svg

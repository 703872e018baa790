"""Polyline sampling of segments and chains."""

from .core import Vec2
from .hermite import Segment


def _forced_params(segment):
    t = segment.interior_feature_t()
    return [] if t is None else [t]


def sample_segment(segment, n=None, chord_tol=None):
    """Sample one segment: either n+1 uniform points or adaptive points
    with midpoint-to-chord deviation below chord_tol.

    Cusp/inflection parameters are always included as explicit samples.
    """
    if (n is None) == (chord_tol is None):
        raise ValueError("give exactly one of n or chord_tol")
    forced = _forced_params(segment)
    if n is not None:
        ts = sorted(set([i / n for i in range(n + 1)] + forced))
        # merge parameters that differ only by roundoff
        merged = [ts[0]]
        for t in ts[1:]:
            if t - merged[-1] > 1e-12:
                merged.append(t)
        return segment.points(merged)

    pts = {0.0: segment.point(0.0), 1.0: segment.point(1.0)}
    for t in forced:
        pts[t] = segment.point(t)
    ts = sorted(pts)
    stack = [(ts[i], ts[i + 1]) for i in range(len(ts) - 1)]
    # max_depth bounds pathological cases; 2^18 points is far below any
    # realistic chord tolerance.
    while stack:
        a, b = stack.pop()
        if b - a < 2 ** -18:
            continue
        m = 0.5 * (a + b)
        pa, pb = pts[a], pts[b]
        pm = segment.point(m)
        chord = pb - pa
        clen = chord.norm()
        if clen == 0.0:
            dev = (pm - pa).norm()
        else:
            dev = abs(chord.cross(pm - pa)) / clen
        if dev > chord_tol:
            pts[m] = pm
            stack.append((a, m))
            stack.append((m, b))
    return [pts[t] for t in sorted(pts)]


def sample_polyline(target, n=None, chord_tol=None):
    """Uniform-count or chord-tolerance polyline of a segment or chain."""
    if isinstance(target, Segment):
        return sample_segment(target, n, chord_tol)
    points = []
    for i, seg in enumerate(target.segments):
        part = sample_segment(seg, n, chord_tol)
        points.extend(part if i == 0 else part[1:])
    return points

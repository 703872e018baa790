"""Standard-form log-aesthetic curves across the alpha regimes.

Evaluates radius of curvature, theta/arc-length conversions and curve
points for a few representative shape parameters, and writes an overview
SVG next to this script.
"""

import math
import os

from lacurves import (
    Chain,
    CurveParams,
    Segment,
    SimilarityTransform,
    Vec2,
    bounds,
    curvature_by_arc,
    point_by_arc,
    rho_of_theta,
    s_of_theta,
    theta_of_s,
)
from lacurves.svgout import export_svg

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)


def show(params, label):
    b = bounds(params)
    print(f"\n{label}: alpha={params.alpha}, lambda={params.lam}")
    print(f"  theta bound: {b.b_theta} ({b.b_theta_kind}), "
          f"s bound: {b.b_s} ({b.b_s_kind})")
    print(f"  rho(theta=0) = {rho_of_theta(params, 0.0)}")
    for s in (0.25, 0.5, 1.0):
        try:
            print(f"  s={s}: theta={theta_of_s(params, s):+.6f} "
                  f"kappa={curvature_by_arc(params, s):+.6f} "
                  f"point={point_by_arc(params, s)}")
        except Exception as exc:
            print(f"  s={s}: {type(exc).__name__}: {exc}")


show(CurveParams(0.0, 0.0), "circle (lambda = 0)")
show(CurveParams(-1.0, 1.0), "clothoid family")
show(CurveParams(0.0, 1.0), "Nielsen-type (alpha = 0)")
show(CurveParams(1.0, 1.0), "logarithmic spiral (alpha = 1)")
show(CurveParams(2.0, 0.5), "circle involute (alpha = 2)")

print("\nexact arc-length/angle conversion round trip:")
p = CurveParams(0.5, 0.7)
theta = 0.9
s = s_of_theta(p, theta)
print(f"  theta={theta} -> s={s:.9f} -> theta={theta_of_s(p, s):.9f}")


def standard_segment(params, s_end):
    """Wrap a plain standard-form arc as a drawable segment."""
    return Segment(
        params=params,
        transform=SimilarityTransform(1.0, 0.0, Vec2(0, 0), False),
        swap_flag=False, branch="within", u0=0.0, u1=s_end,
        theta_domain=(0.0, theta_of_s(params, s_end)),
        contains_cusp=False, contains_inflection=False)


for name, params, s_end in [
        ("circle", CurveParams(0.3, 0.0), math.pi),
        ("spiral", CurveParams(1.0, 0.8), 3.0),
        ("flat", CurveParams(0.5, 0.9), 1.8)]:
    seg = standard_segment(params, s_end)
    path = os.path.join(OUT, f"standard_{name}.svg")
    with open(path, "w") as fh:
        fh.write(export_svg(Chain.start(seg)))
    print(f"wrote {path}")

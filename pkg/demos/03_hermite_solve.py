"""Fixed-alpha G1 Hermite solves: the lambda bisection at work.

One geometric problem, several shape parameters: the solver finds lambda so
the standard control triangle matches the user's, then maps the curve into
place. Watch the branch flags switch as alpha crosses the regimes.
"""

import math
import os

from lacurves import Chain, HermiteProblem, Vec2, export_svg, solve_g1
from lacurves.alphasolve import first_tangent_length
from lacurves.svgout import SvgStyle

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)


def vec_deg(deg, length=1.0):
    return Vec2(length * math.cos(math.radians(deg)),
                length * math.sin(math.radians(deg)))


problem = HermiteProblem(
    A=Vec2(0.0, 0.0), C=Vec2(3.0, 0.0),
    v_A=vec_deg(60.0), v_C_dir=vec_deg(-30.0))

print("A=(0,0) C=(3,0), first tangent at 60 deg, last tangent line at -30 deg")
print(f"{'alpha':>8} {'lambda':>12} {'branch':>8} {'cusp':>5} {'infl':>5} "
      f"{'|v_A|':>9} {'endpoint gap':>13}")
for alpha in (-8.0, -3.0, -1.0, 0.0, 0.5, 1.0, 1.5, 2.0):
    seg = solve_g1(problem, alpha)
    gap = (seg.point(1.0) - problem.C).norm()
    print(f"{alpha:8.2f} {seg.params.lam:12.6f} {seg.branch:>8} "
          f"{str(seg.contains_cusp):>5} {str(seg.contains_inflection):>5} "
          f"{first_tangent_length(seg):9.5f} {gap:13.2e}")

# isosceles data short-circuits to the circular arc
iso = HermiteProblem(Vec2(0, 0), Vec2(2, 0), vec_deg(45), vec_deg(-45))
seg = solve_g1(iso, -2.0)
print(f"\nisosceles data: lambda={seg.params.lam} (circular arc, radius "
      f"{first_tangent_length(seg):.6f})")

seg = solve_g1(problem, -3.0)
path = os.path.join(OUT, "hermite_alpha_-3.svg")
with open(path, "w") as fh:
    fh.write(export_svg(Chain.start(seg),
                        SvgStyle(show_control_points=True,
                                 show_tangents=True)))
print(f"wrote {path}")

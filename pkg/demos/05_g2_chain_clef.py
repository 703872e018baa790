"""G2 chaining and the bundled violin-clef document.

Each appended segment takes the previous end tangent (direction and length)
as its first tangent; equal tangent magnitudes mean equal curvature radii,
so the joints are curvature continuous.
"""

import os

from lacurves import parse_problem, solve_document
from lacurves.svgout import SvgStyle, export_svg

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

CLEF = os.path.join(os.path.dirname(__file__), "..", "src", "lacurves",
                    "data", "violin_clef.json")

doc = parse_problem(open(CLEF).read())
print(f"bundled clef: {len(doc.steps)} chain steps")
records, chain, continuity = solve_document(doc)

print(f"{'seg':>4} {'alpha':>10} {'lambda':>10} {'instance':>11} "
      f"{'first |v|':>10}")
for i, rec in enumerate(records):
    print(f"{i:4d} {rec['alpha']:10.4f} {rec['lambda']:10.6f} "
          f"{rec['instance']:>11} {rec['first_tangent_length']:10.4f}")

print(f"\ncontinuity passed: {continuity['passed']}")
for i, j in enumerate(continuity["joints"]):
    print(f"  joint {i}: position {j['position_gap']:.1e}, tangent "
          f"{j['tangent_angle_gap']:.1e} rad, curvature "
          f"{j['curvature_gap_rel']:.1e} rel")

path = os.path.join(OUT, "violin_clef.svg")
with open(path, "w") as fh:
    fh.write(export_svg(chain, SvgStyle(show_joints=True)))
print(f"\nwrote {path}")

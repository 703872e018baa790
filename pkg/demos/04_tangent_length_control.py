"""Controlling the first-tangent length (and with it, the curvature at A).

The achievable lengths are bounded by the touching-circle limits at
alpha -> +-infinity; inside the range, an outer bisection on alpha matches
any requested length. Matching lengths across a joint is exactly the G2
condition.
"""

import math

from lacurves import (
    HermiteProblem,
    Unreachable,
    Vec2,
    alpha_bisection,
    select_instance,
    tangent_length_limits,
)
from lacurves.alphasolve import first_tangent_length
from lacurves.runner import attainable_interval


def vec_deg(deg, length=1.0):
    return Vec2(length * math.cos(math.radians(deg)),
                length * math.sin(math.radians(deg)))


problem = HermiteProblem(
    A=Vec2(0.0, 0.0), C=Vec2(3.0, 0.0),
    v_A=vec_deg(60.0), v_C_dir=vec_deg(-30.0))

lim = tangent_length_limits(problem)
print(f"touching-circle radii: r_neg_inf={lim.r_neg_inf:.6f} "
      f"r_pos_inf={lim.r_pos_inf:.6f}")
print(f"instance for this data: {select_instance(problem)}")
info = attainable_interval(problem)
print(f"attainable |v_A| interval: {info['attainable']}")

print(f"\n{'target':>8} {'alpha':>12} {'lambda':>12} {'achieved':>10} "
      f"{'instance':>10} {'iters':>6}")
for target in (0.3, 0.8, 1.2, 1.5, 1.63):
    try:
        res = alpha_bisection(problem, target)
        print(f"{target:8.3f} {res.alpha:12.6f} {res.lam:12.6f} "
              f"{first_tangent_length(res.segment):10.6f} "
              f"{res.instance:>10} {res.iterations:6d}")
    except Unreachable as exc:
        print(f"{target:8.3f} unreachable: attainable {exc.attainable}")

print("\nat the theoretical limit the request is refused:")
try:
    alpha_bisection(problem, info["attainable"][1])
except Unreachable as exc:
    print(f"  Unreachable, attainable = {exc.attainable}")

print("\ncurvature control: kappa(A) = 1/|v_A| for these solves")
for target in (0.5, 1.0, 1.5):
    res = alpha_bisection(problem, target)
    k = abs(res.segment.curvature(0.0))
    print(f"  |v_A|={target}: kappa(A)={k:.6f}  1/|v_A|={1 / target:.6f}")

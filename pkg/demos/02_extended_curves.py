"""Extended log-aesthetic curves: the cusp and the inflection point.

The standard curve stops at its parameter bound; mirroring the radius of
curvature continues it through a cusp (alpha > 1) or an inflection point
(alpha < 0). This script walks across both features and checks the mirror
identities numerically.
"""

import math

from lacurves import (
    CurveParams,
    bounds,
    curvature_by_arc,
    point_by_theta,
    rho_of_s,
    rho_of_theta,
    s_of_theta,
    tangent_by_theta,
)

print("== cusp (alpha = 2, lambda = 0.5) ==")
p = CurveParams(2.0, 0.5)
b = bounds(p)
print(f"cusp at theta = {b.b_theta}")
for theta in (-1.0, -1.9, -2.0, -2.1, -3.0):
    rho = rho_of_theta(p, theta)
    tan = tangent_by_theta(p, theta)
    pt = point_by_theta(p, theta)
    print(f"  theta={theta:+.2f}: rho={rho:+.4f} tangent=({tan.x:+.4f},"
          f"{tan.y:+.4f}) point=({pt.x:+.4f},{pt.y:+.4f})")
print("note the tangent direction flip and rho sign change past the cusp")

print("\n== inflection (alpha = -1, lambda = 1: the clothoid) ==")
p = CurveParams(-1.0, 1.0)
b = bounds(p)
print(f"inflection at s = {b.b_s}")
for s in (0.5, 0.9, 1.0, 1.1, 1.5, 2.0):
    rho = rho_of_s(p, s)
    kappa = curvature_by_arc(p, s)
    print(f"  s={s:.2f}: rho={rho if abs(rho) < 1e6 else math.inf:+.4f} "
          f"kappa={kappa:+.6f}  (linear: {1 - s:+.6f})")

print("\n== mirror identity for the arc length ==")
p = CurveParams(-2.3, 0.21)
b = bounds(p)
for frac in (0.2, 0.6, 0.95):
    theta = frac * b.b_theta
    s_w = s_of_theta(p, theta, "within")
    s_b = s_of_theta(p, theta, "beyond")
    print(f"  theta={theta:.4f}: S_within={s_w:.9f} S_beyond={s_b:.9f} "
          f"sum={s_w + s_b:.9f} (2*Bs={2 * b.b_s:.9f})")

print("\n== rho antisymmetry about the cusp ==")
p = CurveParams(3.2, 0.4)
b = bounds(p)
for delta in (0.1, 0.5, 1.5):
    up = rho_of_theta(p, b.b_theta + delta)
    dn = rho_of_theta(p, b.b_theta - delta)
    print(f"  delta={delta}: rho(b+d)={up:+.6f} rho(b-d)={dn:+.6f}")

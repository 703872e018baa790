"""G2 chaining of solved segments.

A joint is curvature-continuous when the next segment's first tangent
vector equals the previous segment's end tangent vector: the tangent
magnitude in the tangential-angle parameterization equals the radius of
curvature, so matching lengths matches curvatures.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from .core import Vec2, rho_of_s, rho_of_theta
from .errors import CurveError, SingularCurvature, Unreachable
from .hermite import DEFAULT_CONFIG, HermiteProblem, Segment
from .alphasolve import alpha_bisection, first_tangent_length, \
    tangent_length_limits

_CUSP_RHO = 1e-12


def end_tangent(segment):
    """World tangent vector at t=1: direction of travel, magnitude equal to
    the transform scale times |rho| at the endpoint's standard parameter.

    Raises SingularCurvature at a cusp endpoint (zero tangent, unbounded
    curvature) since such a point cannot seed a G2 joint.
    """
    p = segment.params
    u = segment.u0 if segment.swap_flag else segment.u1
    if p.lam == 0.0:
        rho = 1.0
    elif segment.uses_theta_param:
        rho = rho_of_theta(p, u)
    else:
        rho = rho_of_s(p, u)
    magnitude = abs(rho) * segment.transform.scale
    if magnitude < _CUSP_RHO * segment.transform.scale:
        raise SingularCurvature("segment ends at a cusp; end tangent vanishes")
    d = segment.tangent(1.0)
    return Vec2(d.x * magnitude, d.y * magnitude)


@dataclass(frozen=True)
class Joint:
    point: Vec2
    tangent: Vec2
    curvature: float


@dataclass(frozen=True)
class Chain:
    """Immutable ordered list of segments with interior joint metadata."""

    segments: tuple = ()
    joints: tuple = ()

    @staticmethod
    def start(segment):
        return Chain(segments=(segment,), joints=())

    def __len__(self):
        return len(self.segments)

    @property
    def last(self):
        return self.segments[-1]

    def end_point(self):
        return self.last.point(1.0)

    def total_arc_length(self):
        return sum(seg.arc_length() for seg in self.segments)


def append_g2(chain, C_next, v_C_dir_next, cfg=DEFAULT_CONFIG):
    """Solve the next segment with the propagated end tangent as its first
    tangent vector (direction and length), giving a G2 joint.

    The sense of the given last-tangent direction selects the instance and
    with it the curvature side at the joint; both senses are tried and the
    one whose signed curvature continues the previous segment wins.
    Raises Unreachable (carrying the attainable range) when the propagated
    length is outside the limits of the new geometry.
    """
    if len(chain) == 0:
        raise ValueError("append_g2 needs a non-empty chain")
    prev = chain.last
    v = end_tangent(prev)
    A = prev.point(1.0)
    k_prev = prev.curvature(1.0)
    vc = Vec2(*v_C_dir_next)

    candidates = []
    last_error = None
    for sense in (vc, Vec2(-vc.x, -vc.y)):
        problem = HermiteProblem(A, Vec2(*C_next), v, sense)
        try:
            result = alpha_bisection(problem, v.norm(), cfg)
        except CurveError as exc:
            if last_error is None or isinstance(exc, Unreachable):
                last_error = exc
            continue
        seg = result.segment
        sign_ok = seg.curvature(0.0) * k_prev >= 0.0
        candidates.append((not sign_ok, seg))
        if sign_ok:
            break
    if not candidates:
        raise last_error
    candidates.sort(key=lambda c: c[0])
    seg = candidates[0][1]
    joint = Joint(point=A, tangent=v, curvature=k_prev)
    return Chain(segments=chain.segments + (seg,),
                 joints=chain.joints + (joint,))


def append_fixed_alpha(chain, C_next, v_C_dir_next, alpha, cfg=DEFAULT_CONFIG):
    """Append a G1-only segment at fixed alpha, propagating the tangent
    direction but not matching its length (no curvature continuity)."""
    from .hermite import solve_g1
    if len(chain) == 0:
        raise ValueError("append_fixed_alpha needs a non-empty chain")
    prev = chain.last
    v = end_tangent(prev)
    A = prev.point(1.0)
    problem = HermiteProblem(A, Vec2(*C_next), v, Vec2(*v_C_dir_next))
    seg = solve_g1(problem, alpha, cfg)
    joint = Joint(point=A, tangent=v, curvature=prev.curvature(1.0))
    return Chain(segments=chain.segments + (seg,),
                 joints=chain.joints + (joint,))


@dataclass(frozen=True)
class JointReport:
    position_gap: float
    tangent_angle_gap: float
    curvature_gap_rel: float
    passed: bool


@dataclass(frozen=True)
class ContinuityReport:
    joints: tuple
    passed: bool
    tol_position: float
    tol_angle: float
    tol_curvature: float


def _fd_curvature(segment, t_end):
    """Curvature at a segment end by symmetric finite differences of the
    tangent angle with respect to arc length, independent of the analytic
    curvature path."""
    def one_sided(h):
        ts = (0.0, h) if t_end == 0.0 else (1.0, 1.0 - h)
        p0, p1 = segment.point(ts[0]), segment.point(ts[1])
        t0, t1 = segment.tangent(ts[0]), segment.tangent(ts[1])
        d_ang = math.atan2(t0.cross(t1), t0.dot(t1))
        ds = (p1 - p0).norm()
        if t_end == 1.0:
            d_ang = -d_ang
        return d_ang / ds if ds > 0 else 0.0

    # Richardson step removes the O(h) bias of the one-sided estimate.
    h = 1e-5
    return 2.0 * one_sided(h) - one_sided(2.0 * h)


def verify_continuity(chain, tol_position=1e-9, tol_angle=1e-6,
                      tol_curvature=1e-4):
    """Per-joint position, tangent-angle and relative curvature gaps.

    Curvatures are measured by finite differences on both sides so the
    check stays independent of the construction path.
    """
    reports = []
    for i in range(1, len(chain.segments)):
        left, right = chain.segments[i - 1], chain.segments[i]
        p_l, p_r = left.point(1.0), right.point(0.0)
        scale = max((left.point(0.0) - p_l).norm(), 1e-30)
        pos_gap = (p_l - p_r).norm() / scale
        t_l, t_r = left.tangent(1.0), right.tangent(0.0)
        ang_gap = abs(math.atan2(t_l.cross(t_r), t_l.dot(t_r)))
        k_l = _fd_curvature(left, 1.0)
        k_r = _fd_curvature(right, 0.0)
        denom = max(abs(k_l), abs(k_r), 1e-30)
        k_gap = abs(k_l - k_r) / denom
        reports.append(JointReport(
            position_gap=pos_gap, tangent_angle_gap=ang_gap,
            curvature_gap_rel=k_gap,
            passed=(pos_gap <= tol_position and ang_gap <= tol_angle
                    and k_gap <= tol_curvature)))
    return ContinuityReport(
        joints=tuple(reports),
        passed=all(r.passed for r in reports),
        tol_position=tol_position, tol_angle=tol_angle,
        tol_curvature=tol_curvature)

"""Outer bisection on alpha: match the requested first-tangent length.

For a fixed geometry the solved segment's tangent magnitude at A varies
monotonically with alpha on each instance branch.  Without endpoint
swapping the branches meet where A becomes the cusp (length 0); with
swapping they are separated by an asymptote where A becomes the inflection
point (length unbounded).  The branch is selected from the sense of the
given tangent vectors relative to the control point B, and the attainable
lengths are bounded by the touching-circle limits at alpha -> +-infinity.
"""

import math
from dataclasses import dataclass

from .core import CurveParams, Vec2, rho_of_s, rho_of_theta
from .errors import CurveError, NoPositiveRoot, NotFound, Unreachable
from .hermite import (
    DEFAULT_CONFIG,
    Segment,
    TriangleData,
    build_triangle,
    solve_from_triangle,
)


@dataclass(frozen=True)
class TangentLimits:
    """Touching-circle radii bounding the first-tangent length.

    r_neg_inf uses circle normals rotated +90/-90 degrees from the given
    v_A / v_C directions, r_pos_inf the opposite pair; they are the
    theoretical length limits of the two alpha -> +-infinity families and
    are never attained.  all_radii additionally carries the radii of the
    same-rotation normal pairs, which bound the families whose travel
    sense at C is opposite to the drawn direction.
    """

    r_neg_inf: float
    r_pos_inf: float
    attainable: tuple  # (min, max) over the drawn-sense pair
    all_radii: tuple = ()


def tangent_length_limits(problem):
    """Solve the two touching-unit-circle systems O1 = A + r*n_A,
    O2 = C + r*n_C, |O2 - O1| = 2r for the scale factor r.

    Each case reduces to a quadratic with exactly one positive root for
    non-parallel tangents.
    """
    d = Vec2(problem.C.x - problem.A.x, problem.C.y - problem.A.y)
    pa = problem.v_A.unit().perp()
    pc = problem.v_C_dir.unit().perp()

    def positive_root(u):
        # (4 - |u|^2) r^2 - 2 (d.u) r - |d|^2 = 0
        a2 = 4.0 - (u.x * u.x + u.y * u.y)
        b1 = -2.0 * d.dot(u)
        c0 = -d.dot(d)
        if a2 <= 1e-12:
            if b1 == 0.0:
                raise NoPositiveRoot("degenerate touching-circle system")
            r = -c0 / b1
            if r <= 0.0:
                raise NoPositiveRoot("touching-circle radius not positive")
            return r
        disc = b1 * b1 - 4.0 * a2 * c0
        if disc < 0.0:
            raise NoPositiveRoot("touching-circle system has no real root")
        sq = math.sqrt(disc)
        for r in ((-b1 + sq) / (2.0 * a2), (-b1 - sq) / (2.0 * a2)):
            if r > 0.0:
                return r
        raise NoPositiveRoot("touching-circle radius not positive")

    r_neg = positive_root(Vec2(-pc.x - pa.x, -pc.y - pa.y))
    r_pos = positive_root(Vec2(pc.x + pa.x, pc.y + pa.y))
    r_alt1 = positive_root(Vec2(pc.x - pa.x, pc.y - pa.y))
    r_alt2 = positive_root(Vec2(pa.x - pc.x, pa.y - pc.y))
    lo, hi = min(r_neg, r_pos), max(r_neg, r_pos)
    return TangentLimits(r_neg_inf=r_neg, r_pos_inf=r_pos,
                         attainable=(lo, hi),
                         all_radii=(r_neg, r_pos, r_alt1, r_alt2))


def first_tangent_length(segment):
    """Magnitude of the world tangent vector at the segment's first point.

    Equals the transform scale when the first point maps to the reference
    point, scaled additionally by |rho| at the first point's standard
    parameter otherwise.
    """
    p = segment.params
    u = segment.u1 if segment.swap_flag else segment.u0
    if p.lam == 0.0:
        rho = 1.0
    elif segment.uses_theta_param:
        rho = rho_of_theta(p, u)
    else:
        rho = rho_of_s(p, u)
    return abs(rho) * segment.transform.scale


def select_instance(problem):
    """Which interior feature the data admits: inflection, cusp or plain.

    Without swapping the first tangent decides (pointing at B admits an
    inflection, away a cusp); with swapped endpoints the sense of the given
    last tangent decides, reversed.  Isosceles data is the circular arc.
    """
    tri = problem if isinstance(problem, TriangleData) else build_triangle(problem)
    if tri.is_isosceles:
        return "plain"
    if not tri.swap_flag:
        return "inflection" if tri.va_toward_B else "cusp"
    return "cusp" if tri.vc_toward_B else "inflection"


@dataclass(frozen=True)
class AlphaResult:
    alpha: float
    lam: float
    segment: Segment
    iterations: int
    length_residual: float
    instance: str


def _family_matches(segment, instance, swapped):
    """Whether a solved segment belongs to the requested instance branch.

    Without swapping the branches split at the cusp; with swapping at the
    inflection asymptote (the cusp branch there also carries featureless
    segments)."""
    if swapped:
        if instance == "inflection":
            return segment.contains_inflection
        return not segment.contains_inflection
    if instance == "inflection":
        return not segment.contains_cusp
    return segment.contains_cusp


def branch_interval(tri, limits, instance, cfg, problem=None):
    """Open attainable length interval of one instance branch.

    The branch ends at the alpha -> -inf (inflection) or +inf (cusp)
    touching-circle configuration; a probe solve at the far end of the
    alpha interval identifies which analytic radius bounds this branch.
    Returns (lo, hi, far_pair) where far_pair is the probe (alpha, length)
    when available.
    """
    far_alpha = cfg.alpha_interval[0] if instance == "inflection" \
        else cfg.alpha_interval[1]
    far = None
    try:
        far_seg = solve_from_triangle(tri, far_alpha, cfg, problem)
        if _family_matches(far_seg, instance, tri.swap_flag):
            far = first_tangent_length(far_seg)
    except CurveError:
        pass
    if far is not None:
        r_branch = min(limits.all_radii, key=lambda r: abs(r - far))
    else:
        matches_neg = (tri.orientation == "ccw") == (instance == "inflection")
        r_branch = limits.r_neg_inf if matches_neg else limits.r_pos_inf
    if tri.swap_flag:
        lo_len, hi_len = r_branch, math.inf
    else:
        lo_len, hi_len = 0.0, r_branch
    far_pair = None if far is None else (far_alpha, far)
    return lo_len, hi_len, far_pair


def _refine_full(tri, problem, instance, residual, target_length,
                 center, width, cfg):
    """Full-precision local root polish around a coarse alpha estimate.

    Iterates until the alpha bracket is tight (the achieved length can be
    locally flat in alpha, so length residual alone cannot certify alpha).
    """
    x0, x1 = center - width, center + width
    recent = []
    best = None
    hint = None
    for it in range(1, 40):
        if x1 - x0 <= 2e-7 * max(1.0, abs(center)):
            break
        x = None
        if len(recent) == 2 and it % 3 != 0:
            (xa, fa), (xb, fb) = recent
            if fb != fa:
                x = xb - fb * (xb - xa) / (fb - fa)
                margin = 1e-3 * (x1 - x0)
                if not (x0 + margin < x < x1 - margin):
                    x = None
        if x is None:
            x = 0.5 * (x0 + x1)
        try:
            segment = solve_from_triangle(tri, x, cfg, problem, hint)
            ok = _family_matches(segment, instance, tri.swap_flag)
            if ok:
                hint = (segment.params.lam, segment.branch)
        except CurveError:
            segment, ok = None, False
        if not ok:
            if instance == "inflection":
                x1 = x
            else:
                x0 = x
            continue
        achieved = first_tangent_length(segment)
        fx = residual(achieved)
        resid = abs(achieved - target_length)
        if best is None or resid < best[0]:
            best = (resid, x, segment)
        recent = (recent + [(x, fx)])[-2:]
        if fx < 0.0:
            x0 = x
        else:
            x1 = x
    return best


def _relaxed(cfg, eps, qtol):
    from dataclasses import replace

    from .quadrature import QuadratureConfig
    if cfg.eps_angle >= eps and cfg.quad.abs_tol >= qtol:
        return cfg
    return replace(
        cfg,
        eps_angle=max(cfg.eps_angle, eps),
        quad=QuadratureConfig(abs_tol=max(cfg.quad.abs_tol, qtol),
                              max_subdivisions=cfg.quad.max_subdivisions),
    )


def _probe_config(cfg):
    """Relaxed tolerances for the interior probes of the alpha search.

    The final result is re-solved and refined at the caller's precision,
    so the probes only need enough accuracy to bracket the root."""
    return _relaxed(cfg, 1e-10, 1e-10)


def _coarse_config(cfg):
    """Very loose tolerances for boundary hunting far from the root."""
    return _relaxed(cfg, 1e-6, 1e-7)


def alpha_bisection(problem, target_length, cfg=DEFAULT_CONFIG):
    """Find alpha whose solved segment matches the requested |v_A|.

    The achieved length is monotone on the instance branch; probes landing
    on the other branch (or failing to solve) tighten the bracket from the
    boundary side.  Raises Unreachable when the target sits at or beyond
    the theoretical limits.
    """
    if not (target_length > 0.0) or not math.isfinite(target_length):
        raise Unreachable("target length must be positive and finite",
                          attainable=None)
    tri = build_triangle(problem)
    limits = tangent_length_limits(problem)

    if tri.is_isosceles:
        segment = solve_from_triangle(tri, 0.0, cfg, problem)
        achieved = first_tangent_length(segment)
        resid = abs(achieved - target_length)
        if resid > cfg.length_tol * max(target_length, 1e-12):
            raise Unreachable(
                f"isosceles data yields the circular arc with fixed length "
                f"{achieved:.6g}", attainable=(achieved, achieved))
        return AlphaResult(alpha=segment.params.alpha, lam=0.0,
                           segment=segment, iterations=0,
                           length_residual=resid, instance="plain")

    instance = select_instance(tri)
    increasing = (tri.swap_flag and instance == "inflection") or \
                 (not tri.swap_flag and instance == "cusp")
    lo, hi = cfg.alpha_interval
    probe_cfg = _probe_config(cfg)
    coarse_cfg = _coarse_config(cfg)

    lo_len, hi_len, far_pair = branch_interval(tri, limits, instance,
                                               coarse_cfg, problem)
    if not (lo_len < target_length < hi_len):
        raise Unreachable(
            f"target length {target_length:.6g} outside the attainable "
            f"open interval ({lo_len:.6g}, {hi_len:.6g}) of the {instance} "
            f"instance", attainable=(lo_len, hi_len))

    # Residual in reciprocal space: (achieved - target)/(achieved*target)
    # has the same sign but stays well conditioned near the swap-case
    # asymptote where the achieved length blows up.
    sign = 1.0 if increasing else -1.0

    def residual(achieved):
        return sign * (achieved - target_length) / (achieved * target_length)

    x0, x1 = lo, hi
    recent = []                    # last on-branch (x, f) pairs for secant
    if far_pair is not None:
        far_alpha, far = far_pair
        recent.append((far_alpha, residual(far)))
    best = None
    hint = None                    # lambda warm start between probes
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        width = x1 - x0
        # The full-precision refinement pass sharpens alpha afterwards.
        if width <= 1e-8 * max(1.0, abs(x0), abs(x1)):
            break
        x = None
        if len(recent) == 2 and iterations % 3 != 0:
            (xa, fa), (xb, fb) = recent
            if fb != fa:
                x = xb - fb * (xb - xa) / (fb - fa)
                margin = 1e-3 * width
                if not (x0 + margin <= x <= x1 - margin):
                    x = None
        if x is None:
            x = 0.5 * (x0 + x1)
        if instance == "cusp" and not tri.swap_flag and x <= 1.0:
            # Cusps need alpha > 1; skip the doomed solve.
            x0 = x
            continue
        # Boundary hunting over a wide bracket only needs signs.
        tier = coarse_cfg if width > 0.5 else probe_cfg
        try:
            segment = solve_from_triangle(tri, x, tier, problem, hint)
            ok = _family_matches(segment, instance, tri.swap_flag)
            if ok:
                hint = (segment.params.lam, segment.branch)
        except CurveError:
            segment, ok = None, False
        if not ok:
            # Off branch: the branch sits below the boundary for inflection
            # instances and above it for cusp instances.
            if instance == "inflection":
                x1 = x
            else:
                x0 = x
            continue
        achieved = first_tangent_length(segment)
        fx = residual(achieved)
        resid = abs(achieved - target_length)
        if best is None or resid < best[0]:
            best = (resid, x, segment)
        recent = (recent + [(x, fx)])[-2:]
        if resid <= 1e-11 * target_length:
            break
        if fx < 0.0:
            x0 = x
        else:
            x1 = x
    if best is None:
        raise NotFound("alpha bisection found no on-branch solve",
                       bracket=(x0, x1), iterations=iterations)
    resid, alpha, segment = best
    tol_abs = cfg.length_tol * max(target_length, 1e-12)
    if probe_cfg is not cfg:
        # Re-measure at the caller's full precision; keep the probe-grade
        # segment when the strict re-solve stumbles on a tolerance edge.
        try:
            seg_full = solve_from_triangle(
                tri, alpha, cfg, problem,
                (segment.params.lam, segment.branch))
            resid_full = abs(first_tangent_length(seg_full) - target_length)
            segment, resid = seg_full, resid_full
        except CurveError:
            pass
    if probe_cfg is not cfg or resid > tol_abs:
        # Probe-grade solves quantize the achieved length, which leaves
        # alpha coarse wherever the length is locally flat; polish at full
        # precision until the alpha bracket itself is tight.  The window
        # covers the probe quantization (wider when the search stalled).
        scale = max(1.0, abs(alpha))
        if resid > tol_abs:
            width = max(1e3 * abs(x1 - x0), 1e-3 * scale)
        else:
            width = max(10.0 * abs(x1 - x0), 2e-5 * scale)
        refined = _refine_full(tri, problem, instance, residual,
                               target_length, alpha, width, cfg)
        if refined is not None and (refined[0] <= resid or resid > tol_abs):
            resid, alpha, segment = refined
    if resid > tol_abs:
        raise NotFound(
            f"alpha bisection stalled (length residual {resid:.3e})",
            bracket=(x0, x1), iterations=iterations)
    return AlphaResult(alpha=alpha, lam=segment.params.lam, segment=segment,
                       iterations=iterations, length_residual=resid,
                       instance=instance)

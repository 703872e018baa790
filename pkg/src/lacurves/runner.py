"""Execute problem documents: the shared engine behind the CLI and the
service."""

import math
from dataclasses import replace

from .alphasolve import (
    alpha_bisection,
    first_tangent_length,
    select_instance,
    tangent_length_limits,
)
from .chain import Chain, append_fixed_alpha, append_g2, end_tangent, \
    verify_continuity
from .core import Vec2
from .documents import continuity_to_obj, segment_to_obj
from .errors import SchemaError
from .hermite import DEFAULT_CONFIG, HermiteProblem, SolverConfig, solve_g1
from .quadrature import QuadratureConfig


def solver_config(overrides, base=DEFAULT_CONFIG):
    """SolverConfig with document/CLI overrides applied."""
    cfg = base
    if overrides.tol_angle is not None:
        cfg = replace(cfg, eps_angle=overrides.tol_angle)
    if overrides.tol_length is not None:
        cfg = replace(cfg, length_tol=overrides.tol_length)
    if overrides.max_iter is not None:
        cfg = replace(cfg, max_iterations=overrides.max_iter)
    if overrides.quad_tol is not None:
        cfg = replace(cfg, quad=QuadratureConfig(abs_tol=overrides.quad_tol))
    return cfg


def _instance_of(segment):
    if segment.contains_cusp:
        return "cusp"
    if segment.contains_inflection:
        return "inflection"
    return "plain"


def _solve_single(step, cfg):
    problem = HermiteProblem(step.A, step.C, step.v_A, step.v_C_dir)
    if step.alpha is not None:
        segment = solve_g1(problem, step.alpha, cfg)
        instance = _instance_of(segment)
    else:
        result = alpha_bisection(problem, step.target_length, cfg)
        segment = result.segment
        instance = result.instance
    return segment, instance


def _record(segment, instance):
    p1 = segment.point(1.0)
    return segment_to_obj(segment, extras={
        "instance": instance,
        "first_tangent_length": first_tangent_length(segment),
        "end_point": [p1.x, p1.y],
    })


def solve_document(doc, base_cfg=DEFAULT_CONFIG):
    """Solve all steps; returns (records, chain, continuity_obj).

    chain is None in list mode; continuity is present only for chains with
    interior joints.
    """
    cfg = solver_config(doc.config, base_cfg)
    records = []
    if doc.mode == "list":
        for step in doc.steps:
            segment, instance = _solve_single(step, cfg)
            records.append(_record(segment, instance))
        return records, None, None

    first, rest = doc.steps[0], doc.steps[1:]
    segment, instance = _solve_single(first, cfg)
    records.append(_record(segment, instance))
    chain = Chain.start(segment)
    for step in rest:
        if step.alpha is not None:
            chain = append_fixed_alpha(chain, step.C, step.v_C_dir,
                                       step.alpha, cfg)
        elif step.target_length is not None:
            prev = chain.last
            v = end_tangent(prev)
            direction = v.unit()
            problem = HermiteProblem(
                prev.point(1.0), step.C,
                Vec2(direction.x * step.target_length,
                     direction.y * step.target_length),
                step.v_C_dir)
            result = alpha_bisection(problem, step.target_length, cfg)
            from .chain import Joint
            chain = Chain(
                segments=chain.segments + (result.segment,),
                joints=chain.joints + (Joint(
                    point=prev.point(1.0), tangent=v,
                    curvature=prev.curvature(1.0)),))
        else:
            chain = append_g2(chain, step.C, step.v_C_dir, cfg)
        seg = chain.last
        records.append(_record(seg, _instance_of(seg)))
    continuity = None
    if len(chain.segments) > 1:
        continuity = continuity_to_obj(verify_continuity(chain))
    return records, chain, continuity


def attainable_interval(problem, cfg=DEFAULT_CONFIG):
    """Limits payload: quadratic radii plus the instance branch interval.

    An unbounded upper end serializes as null.
    """
    from .alphasolve import branch_interval
    from .hermite import build_triangle, solve_from_triangle

    limits = tangent_length_limits(problem)
    tri = build_triangle(problem)
    instance = select_instance(tri)
    if instance == "plain":
        seg = solve_from_triangle(tri, 0.0, cfg, problem)
        fixed = first_tangent_length(seg)
        interval = [fixed, fixed]
    else:
        lo, hi, _ = branch_interval(tri, limits, instance, cfg, problem)
        interval = [lo, None if math.isinf(hi) else hi]
    return {
        "r_neg_inf": limits.r_neg_inf,
        "r_pos_inf": limits.r_pos_inf,
        "instance": instance,
        "attainable": interval,
    }

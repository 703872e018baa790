"""Problem and solution documents (schema v1).

One JSON-based, human-readable format serves the CLI and the service.
Numbers are emitted with full round-trip precision (shortest repr), so
serialize -> parse is the identity on solved values.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .core import Vec2
from .errors import SchemaError

SCHEMA_VERSION = 1

_MODES = ("list", "chain")


@dataclass(frozen=True)
class ProblemStep:
    """One solve request.

    In chain mode only the first step carries A and v_A; later steps take
    them from the previous segment's end.  Exactly one of alpha (fixed
    shape solve) or target_length (length-driven solve) may be given; a
    chain step with neither uses the propagated G2 length.
    """

    C: Vec2
    v_C_dir: Vec2
    A: Optional[Vec2] = None
    v_A: Optional[Vec2] = None
    alpha: Optional[float] = None
    target_length: Optional[float] = None


@dataclass(frozen=True)
class SolverOverrides:
    tol_angle: Optional[float] = None
    tol_length: Optional[float] = None
    max_iter: Optional[int] = None
    quad_tol: Optional[float] = None


@dataclass(frozen=True)
class ProblemDocument:
    mode: str                      # "list" | "chain"
    steps: tuple
    config: SolverOverrides = field(default_factory=SolverOverrides)
    version: int = SCHEMA_VERSION


def _require(cond, message, path):
    if not cond:
        raise SchemaError(message, path=path)


def _parse_vec(obj, path):
    _require(isinstance(obj, (list, tuple)) and len(obj) == 2,
             "expected a pair [x, y]", path)
    x, y = obj
    _require(isinstance(x, (int, float)) and not isinstance(x, bool),
             "x must be a number", path)
    _require(isinstance(y, (int, float)) and not isinstance(y, bool),
             "y must be a number", path)
    _require(math.isfinite(x) and math.isfinite(y),
             "components must be finite", path)
    return Vec2(float(x), float(y))


def _parse_step(obj, i, mode):
    path = f"steps[{i}]"
    _require(isinstance(obj, dict), "step must be an object", path)
    known = {"A", "C", "v_A", "v_C_dir", "alpha", "target_length"}
    for key in obj:
        _require(key in known, f"unknown field {key!r}", path)
    _require("C" in obj, "missing endpoint C", path)
    _require("v_C_dir" in obj, "missing v_C_dir", path)
    C = _parse_vec(obj["C"], path + ".C")
    v_C = _parse_vec(obj["v_C_dir"], path + ".v_C_dir")
    A = _parse_vec(obj["A"], path + ".A") if "A" in obj else None
    v_A = _parse_vec(obj["v_A"], path + ".v_A") if "v_A" in obj else None
    first = i == 0
    if mode == "list" or first:
        _require(A is not None, "missing endpoint A", path)
        _require(v_A is not None, "missing v_A", path)
    else:
        _require(A is None and v_A is None,
                 "chain continuation steps inherit A and v_A", path)
    alpha = obj.get("alpha")
    target = obj.get("target_length")
    _require(alpha is None or (isinstance(alpha, (int, float))
                               and not isinstance(alpha, bool)
                               and math.isfinite(alpha)),
             "alpha must be a finite number", path)
    _require(target is None or (isinstance(target, (int, float))
                                and not isinstance(target, bool)
                                and math.isfinite(target) and target > 0),
             "target_length must be a positive finite number", path)
    _require(alpha is None or target is None,
             "alpha and target_length are mutually exclusive", path)
    if mode == "list" or first:
        _require(alpha is not None or target is not None,
                 "a standalone solve needs alpha or target_length", path)
    return ProblemStep(C=C, v_C_dir=v_C, A=A, v_A=v_A,
                       alpha=None if alpha is None else float(alpha),
                       target_length=None if target is None else float(target))


def _parse_config(obj):
    if obj is None:
        return SolverOverrides()
    path = "config"
    _require(isinstance(obj, dict), "config must be an object", path)
    known = {"tol_angle", "tol_length", "max_iter", "quad_tol"}
    for key in obj:
        _require(key in known, f"unknown field {key!r}", path)
    for key in ("tol_angle", "tol_length", "quad_tol"):
        if key in obj:
            v = obj[key]
            _require(isinstance(v, (int, float)) and not isinstance(v, bool)
                     and v > 0, f"{key} must be a positive number", path)
    if "max_iter" in obj:
        _require(isinstance(obj["max_iter"], int) and obj["max_iter"] > 0,
                 "max_iter must be a positive integer", path)
    return SolverOverrides(
        tol_angle=obj.get("tol_angle"), tol_length=obj.get("tol_length"),
        max_iter=obj.get("max_iter"), quad_tol=obj.get("quad_tol"))


def parse_problem(text):
    """Parse a v1 problem document; raises SchemaError with field context."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    _require(isinstance(obj, dict), "document must be an object", "$")
    _require(obj.get("version") == SCHEMA_VERSION,
             f"unsupported version {obj.get('version')!r}", "version")
    mode = obj.get("mode", "list")
    _require(mode in _MODES, f"mode must be one of {_MODES}", "mode")
    steps_obj = obj.get("steps")
    _require(isinstance(steps_obj, list) and steps_obj,
             "steps must be a non-empty list", "steps")
    known = {"version", "mode", "steps", "config"}
    for key in obj:
        _require(key in known, f"unknown field {key!r}", "$")
    steps = tuple(_parse_step(s, i, mode) for i, s in enumerate(steps_obj))
    return ProblemDocument(mode=mode, steps=steps,
                           config=_parse_config(obj.get("config")))


def serialize_problem(doc):
    steps = []
    for s in doc.steps:
        item = {}
        if s.A is not None:
            item["A"] = [s.A.x, s.A.y]
        item["C"] = [s.C.x, s.C.y]
        if s.v_A is not None:
            item["v_A"] = [s.v_A.x, s.v_A.y]
        item["v_C_dir"] = [s.v_C_dir.x, s.v_C_dir.y]
        if s.alpha is not None:
            item["alpha"] = s.alpha
        if s.target_length is not None:
            item["target_length"] = s.target_length
        steps.append(item)
    out = {"version": doc.version, "mode": doc.mode, "steps": steps}
    cfg = {k: v for k, v in vars(doc.config).items() if v is not None}
    if cfg:
        out["config"] = cfg
    return json.dumps(out, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Solution documents


def transform_to_obj(t):
    return {
        "scale": t.scale,
        "rotation": t.rotation,
        "translation": [t.translation.x, t.translation.y],
        "reflect": t.reflect,
    }


def segment_to_obj(segment, extras=None):
    res = segment.lambda_result
    out = {
        "alpha": segment.params.alpha,
        "lambda": segment.params.lam,
        "swap_flag": segment.swap_flag,
        "branch": segment.branch,
        "contains_cusp": segment.contains_cusp,
        "contains_inflection": segment.contains_inflection,
        "transform": transform_to_obj(segment.transform),
        "theta_domain": list(segment.theta_domain),
        "param_domain": [segment.u0, segment.u1],
        "iterations": 0 if res is None else res.iterations,
        "residual": 0.0 if res is None else res.residual,
    }
    if extras:
        out.update(extras)
    return out


def continuity_to_obj(report):
    return {
        "passed": report.passed,
        "tolerances": {
            "position": report.tol_position,
            "angle": report.tol_angle,
            "curvature": report.tol_curvature,
        },
        "joints": [
            {
                "position_gap": j.position_gap,
                "tangent_angle_gap": j.tangent_angle_gap,
                "curvature_gap_rel": j.curvature_gap_rel,
                "passed": j.passed,
            }
            for j in report.joints
        ],
    }


def solution_to_text(steps, continuity=None, mode="list"):
    """Serialize per-step solution records plus an optional chain report."""
    out = {"version": SCHEMA_VERSION, "mode": mode, "steps": list(steps)}
    if continuity is not None:
        out["continuity"] = continuity
    return json.dumps(out, indent=2) + "\n"


def parse_solution(text):
    """Parse a serialized solution document back into plain objects."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    _require(isinstance(obj, dict), "document must be an object", "$")
    _require(obj.get("version") == SCHEMA_VERSION,
             f"unsupported version {obj.get('version')!r}", "version")
    return obj

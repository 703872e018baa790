"""Command-line interface.

Exit codes: 0 success, 1 input/schema errors, 2 solver failures
(NotFound / Unreachable / degenerate geometry).
"""

import argparse
import json
import sys

from .chain import Chain
from .documents import (
    parse_problem,
    serialize_problem,
    solution_to_text,
)
from .errors import CurveError, SchemaError
from .hermite import HermiteProblem
from .runner import attainable_interval, solve_document, solver_config
from .documents import SolverOverrides
from .sampling import sample_polyline
from .svgout import SvgStyle, export_svg


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _overrides(args):
    return SolverOverrides(
        tol_angle=args.tol_angle, tol_length=args.tol_length,
        max_iter=args.max_iter, quad_tol=args.quad_tol)


def _solve_common(args, expect_mode=None):
    doc = parse_problem(_read_text(args.input))
    if expect_mode and doc.mode != expect_mode:
        raise SchemaError(f"expected a {expect_mode!r}-mode document, "
                          f"got {doc.mode!r}", path="mode")
    merged = doc
    cfg = solver_config(_overrides(args))
    cfg = solver_config(doc.config, cfg)
    records, chain, continuity = solve_document(doc, cfg)
    return doc, records, chain, continuity


def cmd_solve(args):
    doc, records, chain, continuity = _solve_common(args)
    _write_text(args.output, solution_to_text(records, continuity, doc.mode))
    return 0


def cmd_chain(args):
    doc, records, chain, continuity = _solve_common(args, expect_mode="chain")
    _write_text(args.output, solution_to_text(records, continuity, doc.mode))
    return 0


def cmd_sample(args):
    doc, records, chain, continuity = _solve_common(args)
    if chain is None:
        raise SchemaError("sample needs a chain-mode document", path="mode")
    if args.format == "svg":
        style = SvgStyle(show_control_points=args.overlays,
                         show_tangents=args.overlays,
                         show_joints=args.overlays)
        _write_text(args.output, export_svg(chain, style))
        return 0
    kwargs = {"chord_tol": args.chord_tol} if args.chord_tol else \
        {"n": args.count}
    points = sample_polyline(chain, **kwargs)
    payload = {"points": [[p.x, p.y] for p in points]}
    _write_text(args.output, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_limits(args):
    doc = parse_problem(_read_text(args.input))
    step = doc.steps[0]
    if step.A is None or step.v_A is None:
        raise SchemaError("limits needs a step with A and v_A", path="steps[0]")
    problem = HermiteProblem(step.A, step.C, step.v_A, step.v_C_dir)
    cfg = solver_config(_overrides(args))
    cfg = solver_config(doc.config, cfg)
    payload = attainable_interval(problem, cfg)
    _write_text(args.output, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_verify(args):
    doc, records, chain, continuity = _solve_common(args, expect_mode="chain")
    out = {"continuity": continuity if continuity is not None
           else {"passed": True, "joints": []}}
    _write_text(args.output, json.dumps(out, indent=2) + "\n")
    passed = out["continuity"]["passed"]
    return 0 if passed else 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lacurves",
        description="G1/G2 Hermite interpolation with extended "
                    "log-aesthetic curves")
    parser.add_argument("--tol-angle", type=float, default=None,
                        help="lambda-bisection angle residual")
    parser.add_argument("--tol-length", type=float, default=None,
                        help="alpha-bisection relative length tolerance")
    parser.add_argument("--max-iter", type=int, default=None,
                        help="bisection iteration budget")
    parser.add_argument("--quad-tol", type=float, default=None,
                        help="quadrature absolute tolerance")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized harnesses (recorded only)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="problem document path or - for stdin")
        p.add_argument("-o", "--output", default=None,
                       help="output path (default stdout)")

    common(sub.add_parser("solve", help="solve a problem document"))
    common(sub.add_parser("chain", help="solve a chain document"))
    p_sample = sub.add_parser("sample", help="polyline or SVG of a chain")
    common(p_sample)
    p_sample.add_argument("--format", choices=("document", "svg"),
                          default="document")
    p_sample.add_argument("-n", "--count", type=int, default=64,
                          help="uniform sample count per segment")
    p_sample.add_argument("--chord-tol", type=float, default=None,
                          help="adaptive chord tolerance (world units)")
    p_sample.add_argument("--overlays", action="store_true",
                          help="include control point/tangent/joint overlays")
    common(sub.add_parser("limits",
                          help="tangent-length limits of the first step"))
    common(sub.add_parser("verify", help="solve a chain and check G2 gaps"))
    return parser


_COMMANDS = {
    "solve": cmd_solve,
    "chain": cmd_chain,
    "sample": cmd_sample,
    "limits": cmd_limits,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CurveError as exc:
        detail = {"type": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "attainable", None) is not None:
            detail["attainable"] = list(exc.attainable)
        print(f"solver error: {json.dumps(detail)}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

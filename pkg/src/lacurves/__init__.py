"""G1/G2 Hermite interpolation with extended log-aesthetic curves."""

from .core import (
    ALPHA_BAND,
    Bounds,
    CurveParams,
    Vec2,
    bounds,
    curvature_by_arc,
    curvature_by_theta,
    cusp_theta,
    inflection_arc_length,
    point_by_arc,
    point_by_theta,
    rho_of_s,
    rho_of_theta,
    s_of_theta,
    tangent_by_arc,
    tangent_by_theta,
    theta_of_s,
)
from .errors import (
    AmbiguousParameter,
    CurveError,
    DegenerateTriangle,
    DomainError,
    NoPositiveRoot,
    NotFound,
    NotSimilar,
    ParallelTangents,
    QuadratureError,
    SchemaError,
    SingularCurvature,
    Unreachable,
)
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, integrate
from .hermite import (
    DEFAULT_CONFIG,
    HermiteProblem,
    LambdaResult,
    Segment,
    SimilarityTransform,
    SolverConfig,
    StdTriangle,
    TriangleData,
    build_triangle,
    evaluate_segment,
    fit_transform,
    lambda_bisection,
    make_segment,
    solve_from_triangle,
    solve_g1,
    standard_triangle,
)
from .alphasolve import (
    AlphaResult,
    TangentLimits,
    alpha_bisection,
    first_tangent_length,
    select_instance,
    tangent_length_limits,
)
from .chain import (
    Chain,
    ContinuityReport,
    Joint,
    append_fixed_alpha,
    append_g2,
    end_tangent,
    verify_continuity,
)
from .documents import (
    ProblemDocument,
    ProblemStep,
    SolverOverrides,
    parse_problem,
    parse_solution,
    serialize_problem,
    solution_to_text,
)
from .runner import attainable_interval, solve_document, solver_config
from .sampling import sample_polyline, sample_segment
from .svgout import SvgStyle, export_svg

__all__ = [name for name in dir() if not name.startswith("_")]

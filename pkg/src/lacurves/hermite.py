"""G1 Hermite solve for a fixed alpha: control triangle, lambda bisection,
similarity fit, and world-frame segment evaluation.

The user problem gives endpoints A and C, a tangent vector at A (direction
and length) and a tangent direction line at C.  The solver mirrors the
problem into a counterclockwise-turning solving frame, swaps the endpoints
when |AB| > |BC|, and bisects lambda until the standard-frame control
triangle is similar to the user's.

All comparisons use one signed, unwrapped angle measured at the endpoint
whose standard-frame image is the reference point (tangential angle 0):
the canonical first point for alpha <= 1, the canonical last point for
alpha > 1.  That measurement is continuous and monotone along the whole
search path, including past the inflection (alpha < 0) and the cusp
(alpha > 1), so the orientation special cases reduce to plain sign
bisection.  Whether a segment may contain a cusp or an inflection is
decided by the sense of the given tangent vectors relative to the control
point B, and the bisection only accepts targets on the matching side.
"""

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    CurveParams,
    Vec2,
    curvature_by_arc,
    curvature_by_theta,
    point_by_arc,
    point_by_theta,
    rho_of_s,
    rho_of_theta,
    s_of_theta,
    theta_of_s,
)
from .errors import (
    DegenerateTriangle,
    DomainError,
    NotFound,
    NotSimilar,
    ParallelTangents,
    QuadratureError,
)
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, integrate

TWO_PI = 2.0 * math.pi

# Beyond the inflection the S-shaped curve may wind; the chord elevation is
# tracked with a single 2*pi unwrap, reliable while the interior tangential
# angle stays below this cap.  Deeper configurations are NotFound.
_MAX_INTERIOR_ANGLE = 4.6


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and budgets shared by the nested bisections."""

    eps_angle: float = 1e-12
    max_iterations: int = 100
    length_tol: float = 1e-4       # relative, for the alpha bisection
    alpha_interval: tuple = (-999.0, 999.0)
    quad: QuadratureConfig = field(default_factory=QuadratureConfig)


DEFAULT_CONFIG = SolverConfig()


def _wrap(angle):
    """Wrap to (-pi, pi]."""
    a = math.fmod(angle, TWO_PI)
    if a > math.pi:
        a -= TWO_PI
    elif a <= -math.pi:
        a += TWO_PI
    return a


def _ccw(u, v):
    """Signed ccw angle from complex direction u to v, in (-pi, pi]."""
    return _wrap(cmath.phase(v) - cmath.phase(u))


@dataclass(frozen=True)
class HermiteProblem:
    """Endpoints, a tangent vector at A, a tangent direction line at C."""

    A: Vec2
    C: Vec2
    v_A: Vec2
    v_C_dir: Vec2

    def __post_init__(self):
        object.__setattr__(self, "A", Vec2(*self.A))
        object.__setattr__(self, "C", Vec2(*self.C))
        object.__setattr__(self, "v_A", Vec2(*self.v_A))
        object.__setattr__(self, "v_C_dir", Vec2(*self.v_C_dir))
        if self.A == self.C:
            raise DegenerateTriangle("endpoints coincide")
        if self.v_A.norm() == 0.0 or self.v_C_dir.norm() == 0.0:
            raise ParallelTangents("zero tangent vector")


@dataclass(frozen=True)
class TriangleData:
    """Control triangle of a Hermite problem plus canonicalization data.

    theta_delta is the tangential-angle change between the endpoints,
    swap_flag records that the canonical first point is C (|AB| > |BC|),
    and the toward flags give the sense of the input tangents relative to
    B, which decides whether a cusp or an inflection is admissible.
    """

    A: Vec2
    B: Vec2
    C: Vec2
    theta_delta: float
    swap_flag: bool
    orientation: str               # turn of the A->C travel: "ccw" | "cw"
    va_toward_B: bool
    vc_toward_B: bool
    len_AB: float
    len_BC: float
    _A: complex = 0j
    _C: complex = 0j
    _B: complex = 0j
    _vA: complex = 0j

    @property
    def is_isosceles(self):
        m = max(self.len_AB, self.len_BC)
        return abs(self.len_AB - self.len_BC) <= 1e-12 * m

    @property
    def natural_reflect(self):
        """Mirror so the solving traversal (canonical first->last) is ccw."""
        ccw = self.orientation == "ccw"
        return ccw == self.swap_flag

    def canonical(self, reflect):
        """Canonical first/last points, middle point and directed target.

        The directed target is the signed ccw angle, at the image of the
        world point A, between travel direction and chord; it is the value
        the standard-frame measurement has to reproduce.
        """
        A, C, B, vA = self._A, self._C, self._B, self._vA
        if reflect:
            A, C, B, vA = (A.conjugate(), C.conjugate(), B.conjugate(),
                           vA.conjugate())
        if self.swap_flag:
            F, L = C, A
            # Real A is the canonical last point; the solving-frame travel
            # there is the reversed world travel.
            target = _ccw(L - F, -vA)
        else:
            F, L = A, C
            target = _ccw(vA, L - F)
        return F, L, B, target


def build_triangle(problem):
    """Intersect the tangent lines and classify the control triangle."""
    A = complex(problem.A.x, problem.A.y)
    C = complex(problem.C.x, problem.C.y)
    vA = complex(problem.v_A.x, problem.v_A.y)
    vC = complex(problem.v_C_dir.x, problem.v_C_dir.y)

    cross = (vA.conjugate() * vC).imag  # vA x vC
    if abs(cross) <= 1e-14 * abs(vA) * abs(vC):
        raise ParallelTangents("tangent at A is parallel to the tangent line at C")

    d = C - A
    # A + t*vA = C + u*vC  ->  t = (d x vC) / (vA x vC)
    t = (d.conjugate() * vC).imag / cross
    B = A + t * vA

    span = abs(d)
    if abs(B - A) <= 1e-12 * span or abs(B - C) <= 1e-12 * span:
        raise DegenerateTriangle("tangent intersection coincides with an endpoint")

    turn = (vA.conjugate() * d).imag
    if abs(turn) <= 1e-14 * abs(vA) * span:
        raise DegenerateTriangle("tangent at A is collinear with the chord AC")

    beta = abs(_ccw(A - B, C - B))
    theta_delta = math.pi - beta
    if not (0.0 < theta_delta < math.pi):
        raise DegenerateTriangle(f"degenerate tangential-angle change {theta_delta}")

    vc_dot = (vC.conjugate() * (B - C)).real

    return TriangleData(
        A=problem.A, B=Vec2(B.real, B.imag), C=problem.C,
        theta_delta=theta_delta,
        swap_flag=abs(B - A) > abs(C - B),
        orientation="ccw" if turn > 0 else "cw",
        va_toward_B=t > 0.0,
        vc_toward_B=vc_dot > 0.0,
        len_AB=abs(B - A), len_BC=abs(C - B),
        _A=A, _C=C, _B=B, _vA=vA,
    )


# ---------------------------------------------------------------------------
# Standard-frame triangle


def _intersect(p1, d1, p2, d2):
    cross = (d1.conjugate() * d2).imag
    if cross == 0.0:
        raise DegenerateTriangle("standard tangent lines are parallel")
    t = ((p2 - p1).conjugate() * d2).imag / cross
    return p1 + t * d1


@dataclass(frozen=True)
class StdTriangle:
    """Standard-frame control triangle for one (alpha, lambda, branch)."""

    A_dash: complex
    B_dash: complex
    C_dash: complex
    theta_A_dash: float            # interior angle at A', by dot products
    theta_C_dash: float
    measure: float                 # signed unwrapped comparison angle
    s_end: Optional[float]         # arc length of C' for alpha <= 1
    branch: str


def _interior(p, q, r):
    """Interior angle at p of triangle pqr via dot products."""
    u, v = q - p, r - p
    c = (u.real * v.real + u.imag * v.imag) / (abs(u) * abs(v))
    return math.acos(max(-1.0, min(1.0, c)))


def standard_triangle(params, theta_delta, branch="within", quad=DEFAULT_QUADRATURE):
    """Standard triangle A'B'C' with the integration range of the regime.

    alpha <= 1: A' is the reference point and C' = P(theta_delta) on the
    given branch; alpha > 1: A' = P_ext(-theta_delta), C' is the reference
    point.  The comparison measure is the chord elevation seen from the
    reference point, unwrapped so it is monotone along the search path.
    """
    a = params.alpha
    if a > 1.0 and params.lam > 0.0:
        A_dash = point_by_theta(params, -theta_delta, quad)
        A_c = complex(A_dash.x, A_dash.y)
        C_c = 0.0 + 0.0j
        B_c = _intersect(A_c, cmath.exp(-1j * theta_delta), C_c, 1.0 + 0.0j)
        m = math.pi - cmath.phase(A_c)
        if m > math.pi:
            m -= TWO_PI
        s_end = None
    else:
        s_end = s_of_theta(params, theta_delta, branch)
        C_dash = point_by_arc(params, s_end, quad)
        A_c = 0.0 + 0.0j
        C_c = complex(C_dash.x, C_dash.y)
        B_c = _intersect(A_c, 1.0 + 0.0j, C_c, cmath.exp(1j * theta_delta))
        m = cmath.phase(C_c)
        if m < 0.0:
            m += TWO_PI
    return StdTriangle(
        A_dash=A_c, B_dash=B_c, C_dash=C_c,
        theta_A_dash=_interior(A_c, B_c, C_c),
        theta_C_dash=_interior(C_c, B_c, A_c),
        measure=m, s_end=s_end, branch=branch,
    )


# ---------------------------------------------------------------------------
# Lambda bisection


@dataclass(frozen=True)
class LambdaResult:
    lam: float
    iterations: int
    residual: float
    beyond_inf_point: bool
    converged: bool
    branch: str                    # "within" | "beyond"
    reflect: bool = False
    std: Optional[StdTriangle] = None


def _measure(alpha, lam, theta_delta, branch, quad):
    std = standard_triangle(CurveParams(alpha, lam), theta_delta, branch, quad)
    return std.measure, std


def _measure_saturating(alpha, lam, theta_delta, branch, quad):
    """Measure for alpha <= 1 paths; overflow near the bound reads as +inf.

    Near the theta bound (alpha in [0, 1]) the arc length explodes; the
    measure approaches its supremum monotonically, so a failed evaluation
    can safely be treated as beyond any target."""
    try:
        return _measure(alpha, lam, theta_delta, branch, quad)
    except (DomainError, QuadratureError, OverflowError):
        return math.inf, None


def _allowed_feature(tri):
    """Which interior feature the directed first tangent admits.

    Without swapping, a first tangent pointing at B admits an inflection
    (and plain segments) while pointing away admits a cusp.  With swapped
    endpoints the directed tangent sits at the canonical last point, where
    the measurement itself is direction-aware, so no constraint is needed
    (the C-side tangent is a sign-free line in the fixed-alpha solve).
    """
    if not tri.swap_flag:
        return "inflection" if tri.va_toward_B else "cusp"
    return None


def lambda_bisection(alpha, tri, cfg=DEFAULT_CONFIG, hint=None):
    """Find lambda making the standard triangle similar to the user's.

    Tries the natural mirroring of the problem first and falls back to the
    opposite one (configurations containing a cusp can place the chord on
    either side of the first tangent).  Returns a structured failure when
    the directed target is not attainable in the admissible family.
    hint is an optional (lambda, branch) warm start from a nearby solve.
    """
    first = tri.natural_reflect
    try:
        return _lambda_bisection_oriented(alpha, tri, first, cfg, hint)
    except NotFound as primary:
        try:
            return _lambda_bisection_oriented(alpha, tri, not first, cfg)
        except NotFound:
            raise primary from None


def _lambda_bisection_oriented(alpha, tri, reflect, cfg, hint=None):
    result = _solve_oriented(alpha, tri, reflect, cfg, hint)
    # A converged measure with a dissimilar triangle means this orientation
    # matched a spurious representative; report as not-found so the caller
    # can try the mirrored orientation.
    try:
        fit_transform(tri, result.std, reflect)
    except NotSimilar as exc:
        raise NotFound(f"converged to a dissimilar triangle: {exc}") from None
    return result


def _hint_window(alpha, tri, reflect, cfg, path, p_lo, p_hi, target, p_hint):
    """Root-find inside a narrow window around a warm-start estimate.

    Returns None when the window does not bracket the target, in which
    case the caller falls back to the full search."""
    if p_hint is None:
        return None
    w = max(2e-3 * abs(p_hint), 1e-12)
    a = max(p_lo, p_hint - w)
    b = min(p_hi, p_hint + w)
    if not (a < b):
        return None
    th_d = tri.theta_delta
    la, bra = path(a)
    ma, _ = _measure_saturating(alpha, la, th_d, bra, cfg.quad)
    lb, brb = path(b)
    mb, _ = _measure_saturating(alpha, lb, th_d, brb, cfg.quad)
    if not (ma < target < mb):
        return None
    try:
        return _bisect_path(alpha, tri, reflect, cfg, path, a, b, target)
    except NotFound:
        return None


def _solve_oriented(alpha, tri, reflect, cfg, hint=None):
    th_d = tri.theta_delta
    quad = cfg.quad
    feature = _allowed_feature(tri)
    _, _, _, target_dir = tri.canonical(reflect)

    if alpha > 1.0:
        return _bisect_gt1(alpha, tri, reflect, target_dir, feature, cfg,
                           hint)

    if tri.swap_flag:
        target = th_d - target_dir
        if target <= 0.0:
            target += TWO_PI
    else:
        target = target_dir
        if target <= 0.0:
            raise NotFound("first tangent sense unreachable for alpha <= 1")
    if target >= th_d:
        # A genuine control triangle keeps both interior angles below the
        # tangential-angle change; beyond that the middle point B would sit
        # behind the first endpoint.
        raise NotFound(f"target angle {target} at or beyond theta_delta "
                       f"{th_d}: control point behind the first endpoint")

    lo, m_lo = 0.0, th_d / 2.0
    if target <= m_lo + cfg.eps_angle:
        raise NotFound(f"target angle {target} at or below the circular limit",
                       bracket=(0.0, 0.0))

    if alpha == 1.0:
        # The chord elevation approaches theta_delta from below as lambda
        # grows without bound.
        if target >= th_d - cfg.eps_angle:
            raise NotFound("target at or beyond the alpha=1 supremum")
        within = lambda lam: (lam, "within")  # noqa: E731
        if hint is not None:
            got = _hint_window(alpha, tri, reflect, cfg, within,
                               0.0, math.inf, target, hint[0])
            if got is not None:
                return got
        hi = 1.0
        m_hi, _ = _measure_saturating(alpha, hi, th_d, "within", quad)
        grow = 0
        while m_hi < target and grow < 60:
            hi *= 10.0
            m_hi, _ = _measure_saturating(alpha, hi, th_d, "within", quad)
            grow += 1
        if m_hi < target:
            raise NotFound("target beyond the alpha=1 family", bracket=(lo, hi))
        return _bisect_path(alpha, tri, reflect, cfg, within, lo, hi, target)

    lmax = 1.0 / (th_d * (1.0 - alpha))
    if alpha >= 0.0:
        # Same supremum; approach the lambda bound progressively so typical
        # targets never pay for the near-bound arc-length blowup.
        if target >= th_d - cfg.eps_angle:
            raise NotFound(f"target angle {target} at or beyond the supremum "
                           f"{th_d} of the 0 <= alpha < 1 family")
        within = lambda lam: (lam, "within")  # noqa: E731
        if hint is not None:
            got = _hint_window(alpha, tri, reflect, cfg, within,
                               0.0, lmax * (1.0 - 1e-12), target, hint[0])
            if got is not None:
                return got
        hi = None
        m_hi = -math.inf
        for frac in (1e-3, 1e-6, 1e-9):
            cand = lmax * (1.0 - frac)
            m_hi, _ = _measure_saturating(alpha, cand, th_d, "within", quad)
            if m_hi >= target:
                hi = cand
                break
        if hi is None:
            raise NotFound(
                f"target angle {target} beyond reach ({m_hi:.6f} near the "
                "bound)", bracket=(lo, lmax))
        return _bisect_path(alpha, tri, reflect, cfg, within, lo, hi, target)

    # alpha < 0: the path continues past the inflection; lambda = p on the
    # within side, lambda = 2*lmax - p beyond.
    lam_floor = 1.0 / (_MAX_INTERIOR_ANGLE * (1.0 - alpha))
    p_hi = 2.0 * lmax - lam_floor

    def path(p):
        if p <= lmax:
            return p, "within"
        return 2.0 * lmax - p, "beyond"

    if hint is not None:
        p_hint = hint[0] if hint[1] == "within" else 2.0 * lmax - hint[0]
        got = _hint_window(alpha, tri, reflect, cfg, path, 0.0, p_hi,
                           target, p_hint)
        if got is not None:
            return got
    m_joint, _ = _measure(alpha, lmax * (1.0 - 1e-12), th_d, "within", quad)
    if target <= m_joint:
        return _bisect_path(alpha, tri, reflect, cfg, path, 0.0, lmax, target)
    m_hi, _ = _measure_saturating(alpha, lam_floor, th_d, "beyond", quad)
    if m_hi < target:
        raise NotFound(
            f"target angle {target} needs more interior winding than supported",
            bracket=(lmax, p_hi))
    return _bisect_path(alpha, tri, reflect, cfg, path, lmax, p_hi, target)


def _root_find(h, lo, hi, eps, max_iter):
    """Root of a monotone-decreasing h on [lo, hi] with h(lo)>0>h(hi).

    Secant steps clipped into the bracket, with periodic plain bisection to
    guarantee progress.  h may return (+/-inf, None) near a saturated end.
    Returns (payload, residual, iterations); payload is h's second output
    at the best point seen.
    """
    x0, h0 = lo, math.inf
    x1, h1 = hi, -math.inf
    best = (None, math.inf)
    iterations = 0
    for iterations in range(1, max_iter + 1):
        width = x1 - x0
        x = None
        if iterations % 3 != 0 and math.isfinite(h0) and math.isfinite(h1) \
                and h1 != h0:
            x = x1 - h1 * (x1 - x0) / (h1 - h0)
            margin = 0.01 * width
            if not (x0 + margin <= x <= x1 - margin):
                x = None
        if x is None:
            x = 0.5 * (x0 + x1)
        hx, payload = h(x)
        if payload is not None and abs(hx) < best[1]:
            best = (payload, abs(hx))
            if abs(hx) < eps:
                break
        if hx > 0.0:
            x0, h0 = x, hx
        else:
            x1, h1 = x, hx
    return best[0], best[1], iterations


def _bisect_path(alpha, tri, reflect, cfg, path, p_lo, p_hi, target):
    """Root-find the monotone-increasing measure along the path."""
    th_d = tri.theta_delta
    quad = cfg.quad

    def h(p):
        lam, branch = path(p)
        m, std = _measure_saturating(alpha, lam, th_d, branch, quad)
        payload = None if std is None else (lam, branch, std)
        return target - m, payload

    payload, residual, iterations = _root_find(
        h, p_lo, p_hi, cfg.eps_angle, cfg.max_iterations)
    if payload is None:
        raise NotFound("lambda bisection never produced a usable measure",
                       bracket=(p_lo, p_hi), iterations=iterations)
    lam, branch, std = payload
    converged = residual < cfg.eps_angle
    if not converged and residual > 1e-9:
        raise NotFound(f"lambda bisection stalled (residual {residual:.3e})",
                       bracket=(p_lo, p_hi), iterations=iterations)
    return LambdaResult(lam=lam, iterations=iterations, residual=residual,
                        beyond_inf_point=branch == "beyond",
                        converged=converged, branch=branch, reflect=reflect,
                        std=std)


def _bisect_gt1(alpha, tri, reflect, target_dir, feature, cfg, hint=None):
    """alpha > 1: measure at the reference (canonical last) point.

    m(lambda) decreases from theta_delta/2 and crosses the cusp value
    m(lambda_c); pre-cusp roots satisfy m = theta_delta - t, post-cusp
    roots m = theta_delta - t - pi (the travel sense at A' flips).  Only
    the side admitted by the tangent senses is accepted.
    """
    th_d = tri.theta_delta
    quad = cfg.quad
    lam_c = 1.0 / (th_d * (alpha - 1.0))
    lam_hi = 2.0 * lam_c * (1.0 - 1e-9)

    if hint is not None:
        got = _hint_window_gt1(alpha, tri, reflect, target_dir, feature,
                               cfg, hint[0], lam_c, lam_hi)
        if got is not None:
            return got

    m_cusp, _ = _measure(alpha, lam_c, th_d, "within", quad)
    m_top = th_d / 2.0
    m_bot, _ = _measure(alpha, lam_hi, th_d, "within", quad)

    if tri.swap_flag:
        # Direction-aware measurement at the canonical last point picks the
        # side of the cusp by itself.
        cand = _wrap(target_dir)
        target = cand if m_bot < cand < m_top else None
    else:
        # The two representatives live on opposite sides of the cusp; when
        # both sides could host a root, the sense of the first tangent
        # relative to B orders the preference.
        cand_pre = _wrap(th_d - target_dir)
        cand_post = _wrap(th_d - target_dir - math.pi)
        pre_ok = m_cusp <= cand_pre < m_top
        post_ok = m_bot < cand_post < m_cusp
        if feature == "inflection":
            target = cand_pre if pre_ok else (cand_post if post_ok else None)
        else:
            target = cand_post if post_ok else (cand_pre if pre_ok else None)
    if target is None:
        raise NotFound(
            f"directed target not attainable for alpha={alpha} "
            f"(range ({m_bot:.6f}, {m_top:.6f}))", bracket=(0.0, lam_hi))

    return _gt1_root(alpha, tri, reflect, cfg, 0.0, lam_hi, target, lam_c)


def _gt1_root(alpha, tri, reflect, cfg, lo, hi, target, lam_c):
    th_d = tri.theta_delta
    quad = cfg.quad

    def h(lam):
        m, std = _measure(alpha, lam, th_d, "within", quad)
        # Negated: m decreases in lambda, so m - target decreases too.
        return m - target, (lam, std)

    payload, residual, iterations = _root_find(
        h, lo, hi, cfg.eps_angle, cfg.max_iterations)
    lam, std = payload
    converged = residual < cfg.eps_angle
    if not converged and residual > 1e-9:
        raise NotFound(f"lambda bisection stalled (residual {residual:.3e})",
                       bracket=(lo, hi), iterations=iterations)
    return LambdaResult(lam=lam, iterations=iterations, residual=residual,
                        beyond_inf_point=False, converged=converged,
                        branch="beyond" if lam > lam_c else "within",
                        reflect=reflect, std=std)


def _hint_window_gt1(alpha, tri, reflect, target_dir, feature, cfg, lam_hint,
                     lam_c, lam_hi):
    """Warm-started narrow search for alpha > 1; None when not bracketing."""
    th_d = tri.theta_delta
    if lam_hint < lam_c:
        target = _wrap(th_d - target_dir)
    else:
        target = _wrap(th_d - target_dir - math.pi)
    w = max(2e-3 * lam_hint, 1e-12)
    a = max(1e-12, lam_hint - w)
    b = min(lam_hi, lam_hint + w)
    if not (a < b):
        return None
    ma, _ = _measure(alpha, a, th_d, "within", cfg.quad)
    mb, _ = _measure(alpha, b, th_d, "within", cfg.quad)
    if not (mb < target < ma):
        return None
    try:
        return _gt1_root(alpha, tri, reflect, cfg, a, b, target, lam_c)
    except NotFound:
        return None


# ---------------------------------------------------------------------------
# Similarity transform and segments


@dataclass(frozen=True)
class SimilarityTransform:
    """world = translation + scale * exp(i*rotation) * (conj(z) if reflect)."""

    scale: float
    rotation: float
    translation: Vec2
    reflect: bool

    def apply(self, p):
        z = complex(p[0], p[1])
        if self.reflect:
            z = z.conjugate()
        w = complex(self.translation.x, self.translation.y) + \
            self.scale * cmath.exp(1j * self.rotation) * z
        return Vec2(w.real, w.imag)

    def apply_dir(self, d):
        z = complex(d[0], d[1])
        if self.reflect:
            z = z.conjugate()
        w = cmath.exp(1j * self.rotation) * z
        return Vec2(w.real, w.imag)


def fit_transform(tri, std, reflect=False, tol=1e-6):
    """Similarity mapping the standard triangle onto the user triangle.

    Maps the canonical first/last standard points onto the world first/last
    endpoints exactly; scale = |AC| / |A'C'|.  Raises NotSimilar when the
    middle control points disagree beyond tol (relative to |AC|).
    """
    if tri.swap_flag:
        F_w = complex(tri.C.x, tri.C.y)
        L_w = complex(tri.A.x, tri.A.y)
    else:
        F_w = complex(tri.A.x, tri.A.y)
        L_w = complex(tri.C.x, tri.C.y)
    F_s, L_s, B_s = std.A_dash, std.C_dash, std.B_dash
    if reflect:
        F_s, L_s, B_s = F_s.conjugate(), L_s.conjugate(), B_s.conjugate()
    denom = L_s - F_s
    if denom == 0:
        raise NotSimilar("degenerate standard chord")
    w1 = (L_w - F_w) / denom
    w0 = F_w - w1 * F_s
    B_w = complex(tri.B.x, tri.B.y)
    if abs(w0 + w1 * B_s - B_w) > tol * abs(L_w - F_w):
        raise NotSimilar(
            f"middle control point residual {abs(w0 + w1 * B_s - B_w):.3e} "
            f"exceeds {tol} * |AC|")
    return SimilarityTransform(
        scale=abs(w1), rotation=cmath.phase(w1),
        translation=Vec2(w0.real, w0.imag), reflect=reflect)


@dataclass(frozen=True)
class Segment:
    """A solved curve piece in world frame.

    The internal parameter u is arc length for alpha <= 1 and tangential
    angle for alpha > 1; [u0, u1] is traversed forward in the standard
    frame.  When swap_flag is set the world segment starts at the canonical
    last point, so evaluation reverses u.
    """

    params: CurveParams
    transform: SimilarityTransform
    swap_flag: bool
    branch: str
    u0: float
    u1: float
    theta_domain: tuple
    contains_cusp: bool
    contains_inflection: bool
    lambda_result: Optional[LambdaResult] = None
    problem: Optional[HermiteProblem] = None

    @property
    def uses_theta_param(self):
        return self.params.alpha > 1.0 and self.params.lam > 0.0

    def _u(self, t):
        if self.swap_flag:
            return self.u1 + t * (self.u0 - self.u1)
        return self.u0 + t * (self.u1 - self.u0)

    def _std_point(self, u, quad=DEFAULT_QUADRATURE):
        if self.uses_theta_param:
            return point_by_theta(self.params, u, quad)
        return point_by_arc(self.params, u, quad)

    def _std_travel_dir(self, u):
        if self.uses_theta_param:
            rho = rho_of_theta(self.params, u)
            sign = -1.0 if rho < 0.0 else 1.0
            return cmath.exp(1j * u) * sign
        th = theta_of_s(self.params, u)
        return cmath.exp(1j * th)

    def point(self, t, quad=DEFAULT_QUADRATURE):
        return self.transform.apply(self._std_point(self._u(t), quad))

    def points(self, ts, quad=DEFAULT_QUADRATURE):
        """Batch evaluation at sorted normalized parameters.

        Accumulates one integral across the whole domain instead of
        integrating from zero for every sample, so n points cost O(n)
        panels.  Falls back to pointwise evaluation for the circle."""
        import numpy as np

        from .quadrature import _panel

        if not ts:
            return []
        us = [self._u(t) for t in ts]
        order = sorted(range(len(us)), key=lambda i: us[i])
        base = self._std_point(us[order[0]], quad)
        z = complex(base.x, base.y)
        p = self.params
        if p.lam == 0.0:
            pts_std = [self._std_point(u, quad) for u in us]
            return [self.transform.apply(q) for q in pts_std]

        if self.uses_theta_param:
            b = 1.0 / (p.lam * (1.0 - p.alpha))
            k = 1.0 / (p.alpha - 1.0)

            def f(psi):
                psi = np.asarray(psi)
                main = np.maximum((p.alpha - 1.0) * p.lam * psi + 1.0, 0.0)
                mirr = np.maximum((1.0 - p.alpha) * psi * p.lam - 1.0, 0.0)
                rho = np.where(psi > b, main ** k, -(mirr ** k))
                return rho * np.exp(1j * psi)

            splits = (b,)
        else:
            from .core import unit_tangent_integrand
            f, splits = unit_tangent_integrand(p)

        out_std = [None] * len(us)
        out_std[order[0]] = complex(base.x, base.y)
        for prev_i, cur_i in zip(order[:-1], order[1:]):
            a, c = us[prev_i], us[cur_i]
            pieces = [a]
            for s in splits:
                if a < s < c:
                    pieces.append(s)
            pieces.append(c)
            for lo, hi in zip(pieces[:-1], pieces[1:]):
                seg_val, err = _panel(f, lo, hi)
                if err > max(quad.abs_tol, 1e-13 * max(abs(seg_val), 1.0)):
                    seg_val = integrate(f, lo, hi, quad,
                                        split_points=splits)
                z += seg_val
            out_std[cur_i] = z
        return [self.transform.apply(Vec2(w.real, w.imag)) for w in out_std]

    def tangent(self, t):
        """Unit world tangent along the direction of travel (A towards C)."""
        d = self._std_travel_dir(self._u(t))
        if self.swap_flag:
            d = -d
        v = self.transform.apply_dir(Vec2(d.real, d.imag))
        n = v.norm()
        if n == 0.0:
            return Vec2(0.0, 0.0)
        return Vec2(v.x / n, v.y / n)

    def curvature(self, t):
        """Signed world curvature w.r.t. the A-to-C travel direction."""
        u = self._u(t)
        if self.uses_theta_param:
            k = curvature_by_theta(self.params, u)
        else:
            k = curvature_by_arc(self.params, u)
        if self.transform.reflect:
            k = -k
        if self.swap_flag:
            k = -k
        return k / self.transform.scale

    def arc_length(self):
        """Total world arc length (unsigned, cumulative across a cusp)."""
        if self.uses_theta_param:
            p = self.params
            c = 1.0 / (p.lam * (1.0 - p.alpha))
            lo, hi = min(self.u0, self.u1), max(self.u0, self.u1)
            if lo < c < hi:
                s_lo = s_of_theta(p, lo, "beyond")
                s_c = s_of_theta(p, c, "within")
                s_hi = s_of_theta(p, hi, "within")
                std = (s_lo - s_c) + (s_hi - s_c)
            else:
                branch = "beyond" if hi <= c else "within"
                std = abs(s_of_theta(p, hi, branch) - s_of_theta(p, lo, branch))
            return std * self.transform.scale
        return abs(self.u1 - self.u0) * self.transform.scale

    def interior_feature_t(self):
        """Normalized parameter of the cusp/inflection, if inside."""
        if self.contains_cusp:
            p = self.params
            u_star = 1.0 / (p.lam * (1.0 - p.alpha))
        elif self.contains_inflection:
            u_star = -1.0 / (self.params.lam * self.params.alpha)
        else:
            return None
        t = (u_star - self.u0) / (self.u1 - self.u0)
        if self.swap_flag:
            t = 1.0 - t
        return t


def evaluate_segment(segment, t, quad=DEFAULT_QUADRATURE):
    """Point, unit tangent and signed curvature at normalized t in [0, 1]."""
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"normalized parameter {t} outside [0, 1]")
    return {
        "point": segment.point(t, quad),
        "tangent": segment.tangent(t),
        "curvature": segment.curvature(t),
    }


def _circle_segment(tri, problem):
    """Analytic circular arc for the isosceles degenerate case."""
    th_d = tri.theta_delta
    params = CurveParams(0.0, 0.0)
    std = standard_triangle(params, th_d, "within")
    reflect = tri.natural_reflect
    transform = fit_transform(tri, std, reflect)
    return Segment(
        params=params, transform=transform, swap_flag=tri.swap_flag,
        branch="within", u0=0.0, u1=th_d, theta_domain=(0.0, th_d),
        contains_cusp=False, contains_inflection=False,
        lambda_result=LambdaResult(0.0, 0, 0.0, False, True, "within",
                                   reflect, std),
        problem=problem,
    )


def make_segment(tri, alpha, result, problem=None):
    """Assemble a world Segment from a converged lambda result."""
    params = CurveParams(alpha, result.lam)
    std = result.std
    transform = fit_transform(tri, std, result.reflect)
    if params.alpha > 1.0 and params.lam > 0.0:
        u0, u1 = -tri.theta_delta, 0.0
        theta_domain = (u0, u1)
        cusp = 1.0 / (params.lam * (1.0 - params.alpha))
        contains_cusp = u0 < cusp < u1
        contains_inflection = False
    else:
        u0, u1 = 0.0, std.s_end
        theta_domain = (0.0, tri.theta_delta)
        contains_cusp = False
        if params.alpha < 0.0 and params.lam > 0.0:
            b_s = -1.0 / (params.lam * params.alpha)
            contains_inflection = u0 < b_s < u1
        else:
            contains_inflection = False
    return Segment(
        params=params, transform=transform, swap_flag=tri.swap_flag,
        branch=result.branch, u0=u0, u1=u1, theta_domain=theta_domain,
        contains_cusp=contains_cusp, contains_inflection=contains_inflection,
        lambda_result=result, problem=problem,
    )


def solve_from_triangle(tri, alpha, cfg=DEFAULT_CONFIG, problem=None,
                        hint=None):
    """Solve a prepared triangle at fixed alpha (isosceles short-circuits).

    hint is an optional (lambda, branch) warm start from a nearby solve."""
    if tri.is_isosceles:
        _, _, _, target = tri.canonical(tri.natural_reflect)
        want = target if not tri.swap_flag else tri.theta_delta - target
        if abs(want - tri.theta_delta / 2.0) < 1e-9:
            return _circle_segment(tri, problem)
    result = lambda_bisection(alpha, tri, cfg, hint)
    return make_segment(tri, alpha, result, problem)


def solve_g1(problem, alpha, cfg=DEFAULT_CONFIG):
    """Full fixed-alpha pipeline: triangle -> lambda bisection -> segment."""
    tri = build_triangle(problem)
    return solve_from_triangle(tri, alpha, cfg, problem)

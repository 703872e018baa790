"""Standard-form and extended log-aesthetic curve evaluation.

The standard form places the reference point at the origin with radius of
curvature 1 and tangent (1, 0).  Two intrinsic parameters remain: the
curvature-graph slope ``alpha`` and the shape constant ``lambda`` (>= 0,
0 meaning the unit circle).

Depending on alpha, the tangential angle theta and the arc length s are
bounded; the extended curve mirrors the radius of curvature past the bound,
producing a cusp (alpha > 1) or an inflection point (alpha < 0).  Everything
here is a pure function of (params, parameter).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import AmbiguousParameter, DomainError, SingularCurvature
from .quadrature import DEFAULT_QUADRATURE, integrate, integrate_graded

# Formulas are numerically unstable for alpha near (but not at) 0 and 1;
# inputs inside the band snap to the nearest band edge.
ALPHA_BAND = 1e-4


class Vec2(NamedTuple):
    x: float
    y: float

    def __add__(self, other):
        return Vec2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Vec2(self.x - other[0], self.y - other[1])

    def __mul__(self, k):
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, other):
        return self.x * other[0] + self.y * other[1]

    def cross(self, other):
        return self.x * other[1] - self.y * other[0]

    def norm(self):
        return math.hypot(self.x, self.y)

    def unit(self):
        n = self.norm()
        if n == 0.0:
            raise ValueError("zero vector has no direction")
        return Vec2(self.x / n, self.y / n)

    def perp(self):
        """Rotate 90 degrees counterclockwise."""
        return Vec2(-self.y, self.x)

    def angle(self):
        return math.atan2(self.y, self.x)


def _snap_alpha(alpha):
    for pivot in (0.0, 1.0):
        d = alpha - pivot
        if d != 0.0 and abs(d) <= ALPHA_BAND:
            # Snap to the nearer of the pivot and the band edge.
            alpha = pivot if abs(d) < ALPHA_BAND / 2 else pivot + math.copysign(ALPHA_BAND, d)
    return alpha


@dataclass(frozen=True)
class CurveParams:
    """Intrinsic parameters of a standard-form log-aesthetic curve."""

    alpha: float
    lam: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        if not (math.isfinite(self.lam) and self.lam >= 0.0):
            raise ValueError("lambda must be finite and >= 0")
        object.__setattr__(self, "alpha", _snap_alpha(float(self.alpha)))
        object.__setattr__(self, "lam", float(self.lam))

    @property
    def is_circle(self):
        return self.lam == 0.0


class Bounds(NamedTuple):
    """Tangential-angle and arc-length bounds of the non-extended curve."""

    b_theta: Optional[float]
    b_theta_kind: Optional[str]  # "upper" | "lower"
    b_s: Optional[float]
    b_s_kind: Optional[str]


def bounds(params):
    """Theta and s bounds; both absent for the circle (lambda = 0).

    At alpha = 1 the curve has no bound in either parameter (the arc-length
    pole at -1/lambda is never reached at finite theta); at alpha = 0 only
    theta is bounded.
    """
    a, lam = params.alpha, params.lam
    if lam == 0.0 or a == 1.0:
        return Bounds(None, None, None, None)
    b_theta = 1.0 / (lam * (1.0 - a))
    b_theta_kind = "upper" if a < 1.0 else "lower"
    if a == 0.0:
        return Bounds(b_theta, b_theta_kind, None, None)
    b_s = -1.0 / (lam * a)
    b_s_kind = "upper" if a < 0.0 else "lower"
    return Bounds(b_theta, b_theta_kind, b_s, b_s_kind)


def _pow(base, exponent):
    """base**exponent for base >= 0, mapping 0**negative to +inf."""
    if base < 0.0:
        raise DomainError(f"negative base {base} for fractional exponent")
    if base == 0.0:
        return 0.0 if exponent > 0.0 else math.inf
    return base ** exponent


# ---------------------------------------------------------------------------
# Radius of curvature


def _pow1p(x, exponent):
    """(1 + x)**exponent, stable for tiny x, with 0**negative -> +inf."""
    base = 1.0 + x
    if base < 0.0:
        raise DomainError(f"negative base {base} for fractional exponent")
    if base == 0.0:
        return 0.0 if exponent > 0.0 else math.inf
    try:
        return math.exp(exponent * math.log1p(x))
    except OverflowError:
        raise DomainError(f"power (1+{x})**{exponent} overflows") from None


def rho_of_theta(params, theta):
    """Signed radius of curvature by tangential angle.

    For alpha > 1 the extended (mirrored, negative) branch applies at and
    below the bound; for alpha <= 1 theta must stay within the Table-1 bound
    (the alpha < 0 continuation lives in arc length, not in theta).
    """
    a, lam = params.alpha, params.lam
    if lam == 0.0:
        return 1.0
    if a == 1.0:
        return math.exp(lam * theta)
    b_theta = 1.0 / (lam * (1.0 - a))
    if a > 1.0:
        if theta > b_theta:
            return _pow1p((a - 1.0) * lam * theta, 1.0 / (a - 1.0))
        return -_pow((1.0 - a) * theta * lam - 1.0, 1.0 / (a - 1.0))
    if theta > b_theta:
        raise DomainError(f"theta={theta} exceeds the bound {b_theta} for alpha={a}")
    return _pow1p((a - 1.0) * lam * theta, 1.0 / (a - 1.0))


def rho_of_s(params, s):
    """Signed radius of curvature by arc length.

    For alpha < 0 the extension applies past the bound (negative mirrored
    branch, |rho| -> inf approaching the inflection); for alpha > 0 the
    Table-1 lower bound on s is enforced.
    """
    a, lam = params.alpha, params.lam
    if lam == 0.0:
        return 1.0
    if a == 0.0:
        return math.exp(lam * s)
    if a > 0.0:
        b_s = -1.0 / (lam * a)
        if s < b_s:
            raise DomainError(f"s={s} below the bound {b_s} for alpha={a}")
        return _pow1p(lam * a * s, 1.0 / a)
    b_s = -1.0 / (lam * a)
    if s < b_s:
        return _pow1p(a * lam * s, 1.0 / a)
    # Clamp roundoff when s sits numerically on the inflection.
    return -_pow(max(-a * lam * s - 1.0, 0.0), 1.0 / a)


# ---------------------------------------------------------------------------
# theta <-> s conversion


def _expm1_pow1p(x, exponent):
    """(1 + x)**exponent - 1, stable for tiny x."""
    base = 1.0 + x
    if base < 0.0:
        raise DomainError(f"negative base {base} for fractional exponent")
    if base == 0.0:
        return -1.0 if exponent > 0.0 else math.inf
    try:
        return math.expm1(exponent * math.log1p(x))
    except OverflowError:
        raise DomainError(f"power (1+{x})**{exponent} overflows") from None


def theta_of_s(params, s):
    """Tangential angle at arc length s (extended for alpha < 0).

    theta(0) = 0.  For alpha < 0 the angle increases up to the bound angle at
    the inflection arc length and decreases beyond it, mirror-symmetric about
    the inflection.
    """
    a, lam = params.alpha, params.lam
    if lam == 0.0:
        return s
    if a == 0.0:
        return -math.expm1(-lam * s) / lam
    if a == 1.0:
        if lam * s + 1.0 <= 0.0:
            raise DomainError(f"s={s} at or below the pole {-1.0/lam} for alpha=1")
        return math.log1p(lam * s) / lam
    if a > 0.0:
        if lam * a * s + 1.0 < 0.0:
            raise DomainError(f"s={s} below the bound for alpha={a}")
        return _expm1_pow1p(lam * a * s, 1.0 - 1.0 / a) / (lam * (a - 1.0))
    b_s = -1.0 / (lam * a)
    if s < b_s:
        return _expm1_pow1p(lam * a * s, 1.0 - 1.0 / a) / (lam * (a - 1.0))
    # Clamp roundoff when s sits numerically on the inflection.
    return (_pow(max(-a * lam * s - 1.0, 0.0), 1.0 - 1.0 / a) - 1.0) \
        / ((a - 1.0) * lam)


def s_of_theta(params, theta, branch="within"):
    """Arc length at tangential angle theta.

    For alpha < 0 a theta in (0, b_theta] has two preimages; ``branch``
    selects the one before ("within") or after ("beyond") the inflection.
    For alpha > 1, "beyond" addresses the mirrored branch past the cusp
    (signed arc length, V-shaped about the cusp).  For 0 <= alpha <= 1 the
    branch is ignored.
    """
    if branch not in ("within", "beyond"):
        raise ValueError(f"unknown branch {branch!r}")
    a, lam = params.alpha, params.lam
    if lam == 0.0:
        return theta
    if a == 0.0:
        if 1.0 - theta * lam <= 0.0:
            raise DomainError(f"theta={theta} at or beyond the bound for alpha=0")
        return -math.log1p(-theta * lam) / lam
    if a == 1.0:
        return math.expm1(theta * lam) / lam
    b_theta = 1.0 / (lam * (1.0 - a))
    if a > 1.0:
        if branch == "within":
            if theta < b_theta:
                raise DomainError(f"theta={theta} beyond the cusp {b_theta} for alpha={a}")
            return _expm1_pow1p((a - 1.0) * theta * lam, a / (a - 1.0)) / (a * lam)
        if theta > b_theta:
            raise DomainError(f"theta={theta} is before the cusp {b_theta}")
        b_s = -1.0 / (lam * a)
        return b_s + _pow(max((1.0 - a) * lam * theta - 1.0, 0.0),
                          a / (a - 1.0)) / (a * lam)
    if theta > b_theta:
        raise DomainError(f"theta={theta} exceeds the bound {b_theta} for alpha={a}")
    if 0.0 < a < 1.0 or branch == "within":
        return _expm1_pow1p((a - 1.0) * theta * lam, a / (a - 1.0)) / (a * lam)
    x = _pow((a - 1.0) * theta * lam + 1.0, a / (a - 1.0))
    return -(x + 1.0) / (a * lam)


def inflection_arc_length(params):
    """Arc length of the inflection point (alpha < 0), else None."""
    a, lam = params.alpha, params.lam
    if a < 0.0 and lam > 0.0:
        return -1.0 / (lam * a)
    return None


def cusp_theta(params):
    """Tangential angle of the cusp (alpha > 1), else None."""
    a, lam = params.alpha, params.lam
    if a > 1.0 and lam > 0.0:
        return 1.0 / (lam * (1.0 - a))
    return None


# ---------------------------------------------------------------------------
# Points and tangents


def unit_tangent_integrand(params):
    """Vectorized exp(i*theta(u)) plus the parameter values where it loses
    smoothness (used by the arc-length point integrals)."""
    a, lam = params.alpha, params.lam
    if a == 0.0:
        return (lambda u: np.exp(-1j * np.expm1(-lam * np.asarray(u)) / lam),
                ())
    if a == 1.0:
        return (lambda u: np.exp(1j * np.log1p(lam * np.asarray(u)) / lam),
                ())
    k = 1.0 - 1.0 / a
    if a > 0.0:
        def f(u):
            th = np.expm1(k * np.log1p(lam * a * np.asarray(u))) \
                / (lam * (a - 1.0))
            return np.exp(1j * th)
        return f, ()

    b_s = -1.0 / (lam * a)

    def f(u):
        u = np.asarray(u, dtype=float)
        # Clamps guard roundoff at panel edges touching the inflection;
        # panels never straddle it, so each call is single-branch.
        with np.errstate(divide="ignore", invalid="ignore"):
            within = np.expm1(k * np.log1p(np.maximum(lam * a * u, -1.0)))
            beyond = np.maximum(-a * lam * u - 1.0, 0.0) ** k - 1.0
            th = np.where(u < b_s, within, beyond) / (lam * (a - 1.0))
        return np.exp(1j * th)

    return f, (b_s,)


def point_by_arc(params, s, quad=DEFAULT_QUADRATURE):
    """Curve point at arc length s (unit-speed integral of the tangent angle).

    For alpha < 0 the integration splits at the inflection so each panel sees
    a smooth integrand.
    """
    a, lam = params.alpha, params.lam
    if lam == 0.0:
        return Vec2(math.sin(s), 1.0 - math.cos(s))
    if s == 0.0:
        return Vec2(0.0, 0.0)
    # Domain checks happen via theta_of_s at the endpoint.
    theta_of_s(params, s)
    f, splits = unit_tangent_integrand(params)
    # For strongly negative alpha the curvature has a near-logarithmic
    # corner at the inflection; graded panels pay off only when the range
    # reaches it (adaptive subdivision handles milder alpha faster).
    if splits and a < -1.0 and s > 0.8 * splits[0]:
        b_s = splits[0]
        if s <= b_s:
            z = integrate_graded(f, 0.0, s, quad, corner="b")
        else:
            z = integrate_graded(f, 0.0, b_s, quad, corner="b") + \
                integrate_graded(f, b_s, s, quad, corner="a")
    else:
        z = integrate(f, 0.0, s, quad, split_points=splits)
    return Vec2(float(z.real), float(z.imag))


def point_by_theta(params, theta, quad=DEFAULT_QUADRATURE, branch=None):
    """Curve point at tangential angle theta.

    For alpha > 1 any theta is accepted (the integral splits at the cusp).
    For alpha < 0 a positive theta is ambiguous and requires ``branch``.
    For 0 <= alpha <= 1 positive angles are evaluated through arc length
    (the theta-form integrand blows up near the bound), negative ones
    directly.
    """
    a, lam = params.alpha, params.lam
    if lam == 0.0:
        return Vec2(math.sin(theta), 1.0 - math.cos(theta))
    if theta == 0.0:
        return Vec2(0.0, 0.0)
    if a > 1.0:
        return _point_gt1(params, theta, quad)
    if a == 1.0:
        def f(psi):
            return np.exp((lam + 1j) * psi)

        z = integrate(f, 0.0, theta, quad)
        return Vec2(float(z.real), float(z.imag))
    if a < 0.0 and theta > 0.0 and branch is None:
        raise AmbiguousParameter(
            "theta has two arc-length preimages for alpha < 0; pass branch="
            "'within' or 'beyond'")
    s = s_of_theta(params, theta, branch or "within")
    return point_by_arc(params, s, quad)


def _point_gt1(params, theta, quad):
    """alpha > 1: tangential-angle integral, mirrored past the cusp.

    For alpha > 2 the radius factor has a near-logarithmic corner at the
    cusp angle (exponent 1/(alpha-1) < 1), so panels refine geometrically
    toward it; milder alpha integrates faster adaptively.
    """
    a, lam = params.alpha, params.lam
    b_theta = 1.0 / (lam * (1.0 - a))
    k = 1.0 / (a - 1.0)

    def f_main(psi):
        base = np.maximum((a - 1.0) * lam * psi + 1.0, 0.0)
        return base ** k * np.exp(1j * psi)

    def f_mirror(psi):
        base = np.maximum((1.0 - a) * psi * lam - 1.0, 0.0)
        return -base ** k * np.exp(1j * psi)

    sharp = a > 2.0
    if theta >= b_theta:
        if sharp and theta < 0.0 and theta / b_theta > 0.8:
            z = integrate_graded(f_main, 0.0, theta, quad, corner="b")
        else:
            z = integrate(f_main, 0.0, theta, quad)
    elif sharp:
        z = integrate_graded(f_main, 0.0, b_theta, quad, corner="b") + \
            integrate_graded(f_mirror, b_theta, theta, quad, corner="a")
    else:
        z = integrate(f_main, 0.0, b_theta, quad) + \
            integrate(f_mirror, b_theta, theta, quad)
    return Vec2(float(z.real), float(z.imag))


def tangent_by_theta(params, theta, branch=None):
    """d(point)/d(theta): rho_ext(theta) * (cos theta, sin theta).

    The direction flips with rho's sign past a cusp (alpha > 1) and past the
    inflection (alpha < 0, branch='beyond').
    """
    a = params.alpha
    if a < 0.0 and not params.is_circle and theta > 0.0 and branch is None:
        raise AmbiguousParameter(
            "theta is ambiguous for alpha < 0; pass branch='within' or 'beyond'")
    if a < 0.0 and branch == "beyond":
        rho = rho_of_s(params, s_of_theta(params, theta, "beyond"))
    else:
        rho = rho_of_theta(params, theta)
    return Vec2(rho * math.cos(theta), rho * math.sin(theta))


def tangent_by_arc(params, s):
    """Unit tangent (cos theta(s), sin theta(s))."""
    th = theta_of_s(params, s)
    return Vec2(math.cos(th), math.sin(th))


_CUSP_RHO = 1e-14


def curvature_by_theta(params, theta, branch=None):
    """Signed curvature 1/rho_ext at tangential angle theta."""
    a = params.alpha
    if a < 0.0 and not params.is_circle and theta > 0.0 and branch is None:
        raise AmbiguousParameter(
            "theta is ambiguous for alpha < 0; pass branch='within' or 'beyond'")
    if a < 0.0 and branch == "beyond":
        return curvature_by_arc(params, s_of_theta(params, theta, "beyond"))
    rho = rho_of_theta(params, theta)
    if math.isinf(rho):
        return 0.0
    if abs(rho) < _CUSP_RHO:
        raise SingularCurvature(f"cusp at theta={theta}: curvature unbounded")
    return 1.0 / rho


def curvature_by_arc(params, s):
    """Signed curvature 1/rho_ext at arc length s (0 at an inflection)."""
    rho = rho_of_s(params, s)
    if math.isinf(rho):
        return 0.0
    if abs(rho) < _CUSP_RHO:
        raise SingularCurvature(f"cusp at s={s}: curvature unbounded")
    return 1.0 / rho

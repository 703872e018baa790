"""Standard-form and extended curve evaluation."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lacurves import (
    AmbiguousParameter,
    CurveParams,
    DomainError,
    SingularCurvature,
    Vec2,
    bounds,
    curvature_by_arc,
    curvature_by_theta,
    point_by_arc,
    point_by_theta,
    rho_of_s,
    rho_of_theta,
    s_of_theta,
    tangent_by_arc,
    tangent_by_theta,
    theta_of_s,
)


def test_alpha_band_snapping():
    assert CurveParams(0.0, 1.0).alpha == 0.0
    assert CurveParams(1.0, 1.0).alpha == 1.0
    assert CurveParams(0.00006, 1.0).alpha == 1e-4
    assert CurveParams(0.00003, 1.0).alpha == 0.0
    assert CurveParams(1.00006, 1.0).alpha == 1.0 + 1e-4
    assert CurveParams(0.99997, 1.0).alpha == 1.0
    assert CurveParams(-0.00008, 1.0).alpha == -1e-4


def test_params_validation():
    with pytest.raises(ValueError):
        CurveParams(math.nan, 1.0)
    with pytest.raises(ValueError):
        CurveParams(0.5, -0.1)


def test_bounds_examples():
    b = bounds(CurveParams(2.0, 0.5))
    assert b.b_theta == pytest.approx(-2.0) and b.b_theta_kind == "lower"
    assert b.b_s == pytest.approx(-1.0) and b.b_s_kind == "lower"

    b = bounds(CurveParams(-1.0, 1.0))
    assert b.b_theta == pytest.approx(0.5) and b.b_theta_kind == "upper"
    assert b.b_s == pytest.approx(1.0) and b.b_s_kind == "upper"

    b = bounds(CurveParams(1.0, 3.0))
    assert b.b_theta is None and b.b_s is None

    b = bounds(CurveParams(-2.0, 0.0))
    assert b.b_theta is None and b.b_s is None


def test_rho_theta_unit_at_reference():
    for alpha in (-3.0, -1.0, 0.0, 0.4, 1.0, 2.0, 7.5):
        for lam in (0.0, 0.3, 2.0):
            assert rho_of_theta(CurveParams(alpha, lam), 0.0) == pytest.approx(1.0)


def test_rho_theta_cusp_and_mirror():
    p = CurveParams(2.0, 0.5)
    assert rho_of_theta(p, -2.0) == pytest.approx(0.0)
    assert rho_of_theta(p, -3.0) == pytest.approx(-0.5)


def test_rho_theta_monotone():
    p = CurveParams(0.5, 0.8)
    b = bounds(p)
    thetas = [b.b_theta * i / 50 for i in range(-49, 50)]
    vals = [rho_of_theta(p, t) for t in thetas]
    assert all(a < b2 for a, b2 in zip(vals, vals[1:]))


def test_rho_theta_domain_guard():
    p = CurveParams(-1.0, 1.0)
    with pytest.raises(DomainError):
        rho_of_theta(p, 0.6)


def test_rho_s_examples():
    assert rho_of_s(CurveParams(-1.0, 1.0), 0.5) == pytest.approx(2.0)
    p = CurveParams(-0.5, 1.0)
    assert rho_of_s(p, 0.0) == pytest.approx(1.0)
    for s in (0.3, 1.1, 1.9):
        assert rho_of_s(p, s) == pytest.approx(4.0 / (s - 2.0) ** 2)
    assert rho_of_s(CurveParams(0.0, 1.0), 1.0) == pytest.approx(math.e)


def test_rho_s_extension_sign():
    p = CurveParams(-1.0, 1.0)
    assert rho_of_s(p, 1.5) == pytest.approx(-2.0)  # mirror of s=0.5
    with pytest.raises(DomainError):
        rho_of_s(CurveParams(2.0, 0.5), -1.5)


def test_theta_of_s_examples():
    assert theta_of_s(CurveParams(0.0, 1.0), 1.0) == pytest.approx(1 - math.exp(-1))
    p = CurveParams(-1.0, 1.0)
    assert theta_of_s(p, 1.0) == pytest.approx(0.5)
    assert theta_of_s(p, 2.0) == pytest.approx(0.0, abs=1e-15)


def test_theta_of_s_matches_inverse():
    # numerical inversion of s_of_theta reproduces theta_of_s on both branches
    p = CurveParams(-2.3, 0.21)
    b = bounds(p)
    for frac, branch in ((0.4, "within"), (0.85, "within"),
                         (0.85, "beyond"), (0.3, "beyond")):
        theta = frac * b.b_theta
        s = s_of_theta(p, theta, branch)
        assert theta_of_s(p, s) == pytest.approx(theta, abs=1e-12)


def test_s_of_theta_examples():
    p = CurveParams(-1.0, 1.0)
    assert s_of_theta(p, 0.3, "within") == pytest.approx(1 - math.sqrt(0.4))
    assert s_of_theta(p, 0.3, "beyond") == pytest.approx(1 + math.sqrt(0.4))
    assert s_of_theta(CurveParams(1.0, 2.0), 1.0) == \
        pytest.approx((math.e ** 2 - 1) / 2)
    with pytest.raises(DomainError):
        s_of_theta(p, 0.7)


@settings(max_examples=200, deadline=None)
@given(alpha=st.floats(-8.0, -0.01), lam=st.floats(0.01, 3.0),
       frac=st.floats(0.0, 1.0))
def test_mirror_identity_exact(alpha, lam, frac):
    p = CurveParams(alpha, lam)
    b = bounds(p)
    theta = frac * b.b_theta
    s_w = s_of_theta(p, theta, "within")
    s_b = s_of_theta(p, theta, "beyond")
    two_bs = 2.0 * b.b_s
    assert abs(s_w + s_b - two_bs) <= 4e-16 * abs(two_bs)


def test_point_by_theta_origin_and_circle():
    assert point_by_theta(CurveParams(0.7, 1.3), 0.0) == Vec2(0.0, 0.0)
    pt = point_by_theta(CurveParams(0.5, 0.0), math.pi / 2)
    assert pt.x == pytest.approx(1.0) and pt.y == pytest.approx(1.0)


def test_point_by_theta_log_spiral_closed_form():
    # antiderivative of e^{(lam+i)psi} gives the point exactly
    for lam in (0.4, 1.0, 2.5):
        p = CurveParams(1.0, lam)
        for theta in (0.3, 1.0, 2.1):
            want = (cmath.exp((lam + 1j) * theta) - 1.0) / (lam + 1j)
            got = point_by_theta(p, theta)
            assert abs(complex(got.x, got.y) - want) < 1e-12


def test_point_by_theta_ambiguous_guard():
    with pytest.raises(AmbiguousParameter):
        point_by_theta(CurveParams(-1.0, 1.0), 0.3)
    pt_w = point_by_theta(CurveParams(-1.0, 1.0), 0.3, branch="within")
    pt_b = point_by_theta(CurveParams(-1.0, 1.0), 0.3, branch="beyond")
    assert (pt_w - pt_b).norm() > 0.1


def test_point_by_arc_clothoid_against_quadpack():
    from scipy.integrate import quad
    p = CurveParams(-1.0, 0.7)
    for s in (0.6, 1.0 / 0.7, 2.2):
        got = point_by_arc(p, s)
        re = quad(lambda u: math.cos(u - 0.7 * u * u / 2), 0, s,
                  epsabs=1e-13)[0]
        im = quad(lambda u: math.sin(u - 0.7 * u * u / 2), 0, s,
                  epsabs=1e-13)[0]
        assert got.x == pytest.approx(re, abs=1e-10)
        assert got.y == pytest.approx(im, abs=1e-10)


def test_parameterization_consistency():
    # point_by_theta and point_by_arc agree through the conversion
    for alpha, lam, theta in ((0.5, 1.0, 0.9), (0.0, 0.6, 1.2),
                              (1.0, 0.8, 1.1), (-1.7, 0.15, 1.2)):
        p = CurveParams(alpha, lam)
        kw = {"branch": "within"} if alpha < 0 else {}
        a = point_by_theta(p, theta, **kw)
        b = point_by_arc(p, s_of_theta(p, theta, "within"))
        assert (a - b).norm() < 1e-11


def test_tangent_examples():
    assert tangent_by_theta(CurveParams(0.3, 0.7), 0.0) == Vec2(1.0, 0.0)
    cusp = tangent_by_theta(CurveParams(2.0, 0.5), -2.0)
    assert cusp.norm() == pytest.approx(0.0)
    t = tangent_by_theta(CurveParams(2.0, 0.5), -3.0)
    assert t.x == pytest.approx(-0.5 * math.cos(-3.0))
    assert t.y == pytest.approx(-0.5 * math.sin(-3.0))


def test_tangent_matches_finite_difference():
    h = 1e-6
    for alpha, lam, theta in ((0.5, 0.9, 0.7), (2.0, 0.5, -3.0),
                              (1.0, 1.1, 0.8), (3.0, 0.4, -0.6)):
        p = CurveParams(alpha, lam)
        a = point_by_theta(p, theta - h)
        b = point_by_theta(p, theta + h)
        fd = Vec2((b.x - a.x) / (2 * h), (b.y - a.y) / (2 * h))
        want = tangent_by_theta(p, theta)
        assert (fd - want).norm() < 1e-6


def test_tangent_by_arc_unit():
    for alpha, lam, s in ((-1.0, 1.0, 1.7), (0.5, 0.9, 2.0), (0.0, 0.4, 1.0)):
        t = tangent_by_arc(CurveParams(alpha, lam), s)
        assert t.norm() == pytest.approx(1.0)


def test_unit_speed():
    h = 1e-5
    for alpha, lam, s in ((-1.3, 0.4, 1.1), (0.35, 0.8, 0.9)):
        p = CurveParams(alpha, lam)
        a = point_by_arc(p, s)
        b = point_by_arc(p, s + h)
        assert (b - a).norm() / h == pytest.approx(1.0, abs=1e-6)


def test_curvature_examples():
    assert curvature_by_theta(CurveParams(0.8, 0.6), 0.0) == pytest.approx(1.0)
    p = CurveParams(-1.0, 1.0)
    for s in (0.2, 0.8, 1.0, 1.5, 1.9):
        assert curvature_by_arc(p, s) == pytest.approx(1.0 - s, abs=1e-12)
    with pytest.raises(SingularCurvature):
        curvature_by_theta(CurveParams(2.0, 0.5), -2.0)


def test_curvature_zero_at_inflection():
    assert curvature_by_arc(CurveParams(-0.8, 0.9), 1.0 / (0.9 * 0.8)) == 0.0


def test_circle_degenerate_points():
    p = CurveParams(1.7, 0.0)
    for s in (0.0, 0.7, 2.0, 4.5):
        pt = point_by_arc(p, s)
        assert math.hypot(pt.x - 0.0, pt.y - 1.0) == pytest.approx(1.0, abs=1e-12)


def test_circle_involute_closed_form():
    # rho = lam*theta + 1 holds across the cusp for alpha = 2
    lam = 0.5
    p = CurveParams(2.0, lam)
    for theta in (-4.0, -2.0, -1.0, 0.5, 2.0):
        want = cmath.exp(1j * theta) * (lam - 1j * (lam * theta + 1)) \
            - lam + 1j
        got = point_by_theta(p, theta)
        assert abs(complex(got.x, got.y) - want) < 1e-12


def test_rho_ext_antisymmetry_about_cusp():
    p = CurveParams(3.2, 0.4)
    b_theta = 1.0 / (0.4 * (1.0 - 3.2))
    for delta in (0.05, 0.3, 0.9):
        up = rho_of_theta(p, b_theta + delta)
        dn = rho_of_theta(p, b_theta - delta)
        assert up == pytest.approx(-dn, abs=1e-15)

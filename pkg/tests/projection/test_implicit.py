import pytest

from curvefact.branch import standardize
from curvefact.exceptions import NotPolynomialParametrization, VerificationFailed
from curvefact.models import PlaneBranch
from curvefact.projection import (
    generic_projection,
    implicitize,
    normalize_equation,
    param_series_inverse,
)
from curvefact.warnings import NonExactNormalization

XYS = ("x", "y", "s6")


def test_cusp(plane_branch, poly):
    F = implicitize(plane_branch("t^2", "t^3"))
    assert F.F == poly("y^2 - x^3", ("x", "y"))
    assert F.verified
    assert F.normalization.monomial == "y^2"
    assert F.normalization.exact


def test_exc5mf_equation(plane_branch, poly):
    F = implicitize(plane_branch("t^4", "t^6 + t^7"))
    assert str(F) == "y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7"
    assert F.context == ("x", "y")


def test_family_equation(plane_branch, poly):
    F = implicitize(plane_branch("t^4", "t^6 + (1+s6)*t^7", params=("s6",)))
    assert F.params == ("s6",)
    assert F.normalization.exact
    assert F.F == poly("y^4 - 2*x^3*y^2 + x^6 - 4*(1+s6)^2*x^5*y - (1+s6)^4*x^7", XYS)
    # the coefficient of y^4 in the published equation is the unit 1 + s6
    published = poly(
        "y^4 - 2*x^3*y^2 + y^4*s6 + x^6 - 4*x^5*y - 2*x^3*y^2*s6 - x^7 + x^6*s6"
        " - 12*x^5*y*s6 - 5*x^7*s6 - 12*x^5*y*s6^2 - 10*x^7*s6^2 - 4*x^5*y*s6^3"
        " - 10*x^7*s6^3 - 5*x^7*s6^4 - x^7*s6^5",
        XYS,
    )
    assert len(published.terms) == 16
    normalized, record = normalize_equation(published, ("s6",))
    assert normalized == F.F
    assert record.divisor == poly("1 + s6", ("s6",))


def test_equation_vanishes_on_branch(plane_branch):
    pb = plane_branch("t^3 + t^5", "t^4 - 2*t^7")
    F = implicitize(pb).F
    assert F.subs({"x": pb.x, "y": pb.y}).is_zero()


@pytest.mark.parametrize("exponents", [(4, 6, 7), (5, 6, 8, 9), (3, 4, 5), (4, 5, 11)])
def test_y_degree_is_the_multiplicity(monomial_curve, exponents):
    _, pb = generic_projection(monomial_curve(*exponents))
    assert implicitize(pb).F.degree("y") == exponents[0]


def test_truncated_parametrization(branch):
    sb = standardize(branch("t^2 + t^3", "t^5"), trunc=10)
    pb = PlaneBranch(x=sb.coords[0], y=sb.coords[1], trunc=sb.trunc)
    with pytest.raises(NotPolynomialParametrization):
        implicitize(pb)


def test_param_series_inverse(poly):
    s = ("s",)
    assert param_series_inverse(poly("1 + s", s), s, 4) == poly("1 - s + s^2 - s^3", s)
    assert param_series_inverse(poly("2", s), s, 4) == poly("1/2", s)
    with pytest.raises(VerificationFailed):
        param_series_inverse(poly("s", s), s, 4)


def test_inexact_normalization(poly):
    ctx = ("x", "y", "s")
    with pytest.warns(NonExactNormalization):
        F, record = normalize_equation(poly("(1+s)*y^2 - x^3", ctx), ("s",), param_order=3)
    assert F == poly("y^2 - x^3 + s*x^3 - s^2*x^3", ctx)
    assert not record.exact
    assert record.param_order == 3


def test_normalization_by_a_constant(poly):
    F, record = normalize_equation(poly("-3*y^3 + x^4", ("x", "y")))
    assert F == poly("y^3 - 1/3*x^4", ("x", "y"))
    assert record.divisor == -3

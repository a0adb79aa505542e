import pytest

from curvefact.cli import read_input
from curvefact.exactalg import poly_adjugate, poly_det
from curvefact.exceptions import NoPresentationFound, NonTransversal
from curvefact.matfact import build_mf, presentation_matrix, verify_mf
from curvefact.models import MatrixFactorization, ProjectionPlane
from curvefact.projection import specialize

XY = ("x", "y")


def test_presentation_of_the_cusp_module(static_dir):
    m = read_input(static_dir / "cusp34.module")
    F = read_input(static_dir / "noalg.mf").F
    d = presentation_matrix(m, F)
    assert d.shape == (2, 2)
    assert poly_det(d) == F.F
    report = verify_mf(MatrixFactorization(F=F, d=d, h=poly_adjugate(d), gens=m))
    assert report.passed


def test_caps_too_small(static_dir):
    m = read_input(static_dir / "cusp34.module")
    F = read_input(static_dir / "noalg.mf").F
    # the second column of any presentation has degree 3
    with pytest.raises(NoPresentationFound, match="larger caps"):
        presentation_matrix(m, F, D=2)


def test_build_mf(monomial_curve, poly):
    b = monomial_curve(4, 6, 7)
    mf = build_mf(b, ProjectionPlane.from_values((1, 0, 0, 0, 1, 1)))
    assert mf.b == 2
    assert mf.F.F == poly("y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7", XY)
    assert mf.gens.orders == (0, 7)
    assert poly_det(mf.d) == mf.F.F
    assert mf.d @ mf.h == mf.h @ mf.d
    assert verify_mf(mf).passed


def test_build_mf_on_a_bad_plane(monomial_curve):
    b = monomial_curve(4, 6, 7)
    with pytest.raises(NonTransversal):
        build_mf(b, ProjectionPlane.from_values((0, 1, 0, 0, 0, 1)))


def test_build_mf_on_a_family(monomial_curve, poly):
    s6 = poly("s6", ("s6",))
    mf = build_mf(monomial_curve(4, 6, 7), ProjectionPlane.from_values((1, 0, 0, 0, 1, 1 + s6)))
    assert mf.F.params == ("s6",)
    assert mf.F.F == poly(
        "y^4 - 2*x^3*y^2 + x^6 - 4*(1+s6)^2*x^5*y - (1+s6)^4*x^7", ("x", "y", "s6")
    )
    assert poly_det(mf.d) == mf.F.F
    assert verify_mf(mf).passed

    special = specialize(mf, {"s6": 0})
    assert special.F.F == poly("y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7", XY)
    assert verify_mf(special).passed


def test_explicit_parameter_cap_below_the_family(monomial_curve, poly):
    s6 = poly("s6", ("s6",))
    # the first column of any presentation has degree 3 in s6
    with pytest.raises(NoPresentationFound, match="parameter degree 2"):
        build_mf(
            monomial_curve(4, 6, 7),
            ProjectionPlane.from_values((1, 0, 0, 0, 1, 1 + s6)),
            param_degree=2,
        )

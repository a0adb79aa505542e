import pytest

from curvefact.branch import standardize
from curvefact.cli import read_input
from curvefact.exceptions import MissingParameter
from curvefact.projection import implicitize, project, specialize
from curvefact.models import ProjectionPlane

XY = ("x", "y")


@pytest.fixture
def family_pb(plane_branch):
    return plane_branch("t^4", "t^6 + (1+s6)*t^7", params=("s6",))


def test_equation_at_the_origin(family_pb, poly):
    F0 = specialize(implicitize(family_pb), {"s6": 0})
    assert F0.F == poly("y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7", XY)
    assert F0.F.vars == XY
    assert F0.params == ()


@pytest.mark.parametrize("value", [0, 2, -1])
def test_commutes_with_implicitize(family_pb, value):
    lhs = specialize(implicitize(family_pb), {"s6": value}).F
    rhs = implicitize(specialize(family_pb, {"s6": value})).F
    assert lhs == rhs


def test_value_two(family_pb, poly):
    pb = specialize(family_pb, {"s6": 2})
    assert pb.y == poly("t^6 + 3*t^7")
    assert implicitize(pb).F == poly("y^4 - 2*x^3*y^2 + x^6 - 36*x^5*y - 81*x^7", XY)


def test_matrix_at_the_origin(static_dir):
    family = read_input(static_dir / "exc5mf_def.mf")
    fixed = read_input(static_dir / "exc5mf.mf")
    assert specialize(family.d, {"s": 0}) == fixed.d
    assert specialize(family.F, {"s": 0}).F == fixed.F.F
    special = specialize(family, {"s": 0})
    assert special.d == fixed.d


def test_missing_parameter(family_pb, poly):
    with pytest.raises(MissingParameter, match="s6"):
        specialize(family_pb, {})
    with pytest.raises(MissingParameter):
        specialize(poly("x + s", ("x", "s")), {"r": 1})


def test_parameter_free_is_unchanged(plane_branch, poly, monomial_curve):
    pb = plane_branch("t^2", "t^3")
    assert specialize(pb, {"s": 1}) is pb
    p = poly("x + y", XY)
    assert specialize(p, {}) is p
    sb = monomial_curve(4, 6, 7)
    assert specialize(sb, {}) is sb


def test_standard_branch(branch, poly):
    sb = standardize(branch("t^4", "t^6 + (1+s6)*t^7", params=("s6",)))
    special = specialize(sb, {"s6": 1})
    assert special.params == ()
    assert special.coords[1] == poly("t^6 + 2*t^7")
    assert special.transforms[-1] == "specialized at s6 = 1"


def test_projection_then_specialize(monomial_curve, poly):
    s6 = poly("s6", ("s6",))
    plane = ProjectionPlane.from_values((1, 0, 0, 0, 1, 1 + s6))
    pb = specialize(project(monomial_curve(4, 6, 7), plane), {"s6": 1})
    assert pb.y == poly("t^6 + 2*t^7")


def test_unsupported_type():
    with pytest.raises(TypeError):
        specialize("y^2 - x^3", {})

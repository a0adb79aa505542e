from fractions import Fraction

import pytest
from pydantic import BaseModel, ValidationError

from curvefact.exactalg import PolyMatrix
from curvefact.models import (
    AlgebraWitness,
    Branch,
    EquivalenceVerdict,
    MatrixFactorization,
    ModuleData,
    PlaneBranch,
    Rational,
    Report,
    Verdict,
    at_origin,
    plain,
    t_exponents,
)

XY = ("x", "y")


class _Value(BaseModel):
    value: Rational


def test_branch_context(branch):
    b = branch("t^4", "t^6 + t^7 + s*t^7", params=("s",))
    assert b.n == 2
    assert b.is_family
    assert b.exact
    assert b.context == ("t", "s")
    assert b.orders() == (4, 6)
    assert b.at_origin().params == ()


def test_family_with_a_non_injective_fibre(branch):
    with pytest.raises(ValidationError, match="gcd 2"):
        branch("t^4", "t^6 + s*t^7", params=("s",))


@pytest.mark.parametrize(
    "coords,message",
    [
        (("t^4", "t^6"), "gcd 2"),
        (("1 + t", "t^2"), "origin"),
        (("t^3",), "at least 2"),
    ],
)
def test_invalid_branches(branch, coords, message):
    with pytest.raises(ValidationError, match=message):
        branch(*coords)


def test_unknown_variable(poly):
    with pytest.raises(ValidationError, match="only t and the parameters"):
        Branch(coords=(poly("t^2", ("t", "s")), poly("t^3 + s*t^4", ("t", "s"))))


def test_trunc_is_checked(branch):
    with pytest.raises(ValidationError, match="at least 2"):
        branch("t^2", "t^3", trunc=1)


def test_models_are_immutable(branch):
    b = branch("t^2", "t^3")
    with pytest.raises(TypeError):
        b.name = "other"


def test_plane_branch(plane_branch):
    pb = plane_branch("t^4", "t^6 + (1+s)*t^7", params=("s",))
    assert pb.support_gcd == 1
    assert pb.is_reduced
    assert not plane_branch("t^4", "t^6").is_reduced
    assert pb.at_origin().params == ()
    assert pb.as_branch().n == 2
    with pytest.raises(ValidationError):
        plane_branch("1 + t", "t^2")


def test_helpers(poly):
    p = poly("t^6 + (1+s)*t^7", ("t", "s"))
    assert at_origin(p, ("s",)) == poly("t^6 + t^7")
    assert t_exponents(p) == (6, 7)
    assert t_exponents(poly("3", ("x",))) == (0,)


def test_module_data(module, poly):
    m = module("t^3", "t^4", "1", "t^5")
    assert m.b == 2
    assert m.orders == (0, 5)
    with pytest.raises(ValidationError, match="t alone"):
        ModuleData(plane=m.plane, gens=(poly("x*t", ("x", "t")),))
    with pytest.raises(ValidationError, match="At least one"):
        ModuleData(plane=m.plane, gens=())


def test_matrix_factorization_shape(static_dir, poly):
    from curvefact.cli import read_input

    mf = read_input(static_dir / "noalg.mf")
    assert mf.b == 2
    assert mf.params == ()
    with pytest.raises(ValidationError, match="square"):
        MatrixFactorization(F=mf.F, d=mf.d, h=PolyMatrix([[poly("x", XY)]], XY))


def test_verdict_needs_witnesses():
    with pytest.raises(ValidationError, match="both witnesses"):
        EquivalenceVerdict(verdict=Verdict.EQUIVALENT, degree=1)
    with pytest.raises(ValidationError, match="certificate"):
        EquivalenceVerdict(verdict=Verdict.INEQUIVALENT, degree=1)
    assert EquivalenceVerdict(verdict=Verdict.INCONCLUSIVE, degree=1).phi is None


@pytest.mark.parametrize("value,expected", [(3, Fraction(3)), ("-2/6", Fraction(-1, 3))])
def test_rational(value, expected):
    assert _Value(value=value).value == expected


@pytest.mark.parametrize("value", [0.5, True, "x"])
def test_rational_must_be_exact(value):
    with pytest.raises(ValidationError):
        _Value(value=value)


def test_plain(poly):
    witness = AlgebraWitness(is_algebra=True, identity="1", trunc=12)
    assert plain(witness)["trunc"] == 12
    assert plain({"a": Fraction(4, 2), "b": Fraction(1, 2)}) == {"a": 2, "b": "1/2"}
    assert plain({3, 1, 2}) == [1, 2, 3]
    assert plain(poly("1 + t")) == "1 + t"
    assert plain(Verdict.INCONCLUSIVE) == "Inconclusive"


def test_report():
    report = Report(command="verify-mf", checks={"product": True, "determinant": False})
    assert report.failed
    assert '"command": "verify-mf"' in report.to_json()
    assert "command: verify-mf" in report.to_yaml()
    assert not Report(command="cone5").failed

from fractions import Fraction

import pytest

from curvefact.cli import read_input
from curvefact.exactalg import PolyMatrix
from curvefact.matfact import det_ratio, reduce_params, verify_mf
from curvefact.models import MatrixFactorization

XY = ("x", "y")


@pytest.fixture
def load(static_dir):
    def _load(name: str):
        return read_input(static_dir / name)

    return _load


@pytest.mark.parametrize("name", ["exc5mf.mf", "noalg.mf", "noalg_swapped.mf"])
def test_valid_pairs(load, name):
    report = verify_mf(load(name))
    assert report.passed
    assert all(c.witness is None for c in report.checks)


def test_check_order(load):
    names = [c.name for c in verify_mf(load("exc5mf.mf")).checks]
    assert names == ["product", "minimality", "determinant", "syzygies"]
    # no generators, no syzygy check
    names = [c.name for c in verify_mf(load("noalg_swapped.mf")).checks]
    assert names == ["product", "minimality", "determinant"]


def test_perturbed_entry(load):
    report = verify_mf(load("exc5mf_perturbed.mf"))
    assert not report.passed
    assert report["product"].witness == "(d h)[1,1] - F = -x*y^2 + x^4 - 3*x^3*y - x^5"
    assert report["minimality"].passed
    assert not report["determinant"].passed
    with pytest.raises(KeyError):
        report["syzygies"]


def test_unit_entry(load, poly):
    mf = load("noalg.mf")
    d = mf.d.with_entry(0, 0, poly("1 + y", XY))
    report = verify_mf(MatrixFactorization(F=mf.F, d=d, h=mf.h, gens=mf.gens))
    assert report["minimality"].witness == "d[1,1] = 1 + y"


def test_wrong_column(load, poly):
    mf = load("noalg.mf")
    # (x, -y) is not a relation of 1 and t over the (3,4) cusp
    d = PolyMatrix([[poly("x", XY), mf.d[0, 1]], [poly("-y", XY), mf.d[1, 1]]], XY)
    report = verify_mf(MatrixFactorization(F=mf.F, d=d, h=mf.h, gens=mf.gens))
    assert report["syzygies"].witness == "column 1: t^3 - t^5"


def test_family_at_generic_parameter(load):
    report = verify_mf(load("exc5mf_def.mf"))
    assert report.passed


def test_det_ratio(load, poly):
    mf = load("noalg.mf")
    F = mf.F
    assert det_ratio(poly("y^3 - x^4", XY), F) == 1
    assert det_ratio(poly("-3*y^3 + 3*x^4", XY), F) == -3
    assert det_ratio(poly("y^3 - 2*x^4", XY), F) is None
    assert det_ratio(poly("0", XY), F) is None
    assert isinstance(det_ratio(poly("1/2*y^3 - 1/2*x^4", XY), F), Fraction)


def test_reduce_params_exact_equation(load, poly):
    F = load("exc5mf_def.mf").F
    p = poly("s^5*x", ("x", "y", "s"))
    assert reduce_params(p, F) == p

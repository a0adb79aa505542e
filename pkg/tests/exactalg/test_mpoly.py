from fractions import Fraction

import pytest

from curvefact.exactalg import MPoly, merge_vars
from curvefact.exceptions import NotDivisible


@pytest.fixture
def xy(poly):
    def _xy(text):
        return poly(text, ("x", "y"))

    return _xy


def test_printing_order(xy):
    F = xy("-x^7 - 4*x^5*y + x^6 - 2*x^3*y^2 + y^4")
    assert str(F) == "y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7"


def test_equality_ignores_context(poly):
    assert poly("x + y", ("x", "y")) == poly("y + x", ("y", "x", "s"))
    assert poly("3", ("x",)) == 3
    assert MPoly.zero(("x",)) == MPoly.zero()


def test_merge_vars():
    assert merge_vars(("x", "y"), ("s", "x"), ("t",)) == ("x", "y", "s", "t")


def test_arithmetic_merges_contexts(poly):
    p = poly("x + 1", ("x",)) * poly("s", ("s",))
    assert p.vars == ("x", "s")
    assert p == poly("x*s + s", ("x", "s"))


def test_divexact(xy):
    F = xy("x^2 - y^2")
    assert F.divexact(xy("x - y")) == xy("x + y")
    with pytest.raises(NotDivisible):
        F.divexact(xy("x + 2*y"))
    with pytest.raises(ZeroDivisionError):
        F.divexact(MPoly.zero())


def test_subs(poly):
    F = poly("y^2 - x^3", ("x", "y"))
    x, y = poly("t^2"), poly("t^3")
    assert F.subs({"x": x, "y": y}).is_zero()
    assert F(x=2).coefficient({"y": 2}) == 1
    assert F(x=2).constant_term == -8


def test_coefficients(poly):
    p = poly("(1+s)*y^2 + 3*x*y + s*x", ("x", "y", "s"))
    assert p.coefficient({"x": 1, "y": 1}) == 3
    assert p.coefficient_in({"y": 2}, ("x", "y")) == poly("1 + s", ("s",))
    assert p.degree("y") == 2
    assert p.degree_in(("x", "y")) == 2
    assert p.order_in(("x", "y")) == 1
    assert set(p.split(("x", "y"))) == {(0, 2), (1, 1), (1, 0)}


def test_truncate_degree(poly):
    p = poly("1 + s + s^2 + s^3", ("s",))
    assert p.truncate_degree(("s",), 2) == poly("1 + s", ("s",))


def test_series_conversion(poly):
    p = poly("t^4 + t^6")
    s = p.to_series("t", 6)
    assert s.terms() == {4: 1}
    assert MPoly.from_series(s) == poly("t^4")
    assert p.t_terms() == {4: 1, 6: 1}
    with pytest.raises(ValueError):
        poly("t*s", ("t", "s")).t_terms()


def test_drop_vars(poly):
    p = poly("x", ("x", "s"))
    assert p.drop_vars(("s",)).vars == ("x",)
    with pytest.raises(ValueError):
        p.drop_vars(("x",))


def test_content():
    p = MPoly({(1,): Fraction(2, 3), (2,): Fraction(4, 5)}, ("x",))
    assert p.content() == Fraction(2, 15)


def test_rejects_bad_exponents():
    with pytest.raises(ValueError):
        MPoly({(1, 2): 1}, ("x",))
    with pytest.raises(ValueError):
        MPoly({(-1,): 1}, ("x",))

from itertools import combinations
from math import gcd

import pytest

from curvefact.branch import minimal_generators, power_products, semigroup, standardize
from curvefact.exceptions import InsufficientTruncation
from curvefact.warnings import IncompleteSemigroup, ParameterSpecialized


TRIPLES = [t for t in combinations(range(3, 13), 3) if gcd(gcd(*t[:2]), t[2]) == 1]


def test_m467(monomial_curve):
    sg = semigroup(monomial_curve(4, 6, 7))
    assert sg.complete
    assert sg.gaps == (1, 2, 3, 5, 9)
    assert sg.delta == 5
    assert sg.frobenius == 9
    assert sg.conductor_c == 10
    assert sg.gorenstein
    assert sg.minimal_generators == (4, 6, 7)
    assert sg.contains(100)
    assert not sg.contains(9)


def test_m5689_is_not_gorenstein(monomial_curve):
    sg = semigroup(monomial_curve(5, 6, 8, 9))
    assert sg.gaps == (1, 2, 3, 4, 7)
    assert sg.conductor_c == 8
    assert sg.gorenstein is False
    assert minimal_generators(sg) == (5, 6, 8, 9)


def test_values_beyond_the_exponents(branch):
    """y^2 - x^3 = 2 t^13 + t^14 contributes the value 13."""
    sg = semigroup(standardize(branch("t^4", "t^6 + t^7")))
    assert sg.minimal_generators == (4, 6, 13)
    assert sg.gaps == (1, 2, 3, 5, 7, 9, 11, 15)
    assert sg.delta == 8
    assert sg.conductor_c == 16


@pytest.mark.parametrize("exponents", TRIPLES, ids=str)
def test_monomial_curves_against_closure(monomial_curve, semigroup_oracle, exponents):
    sg = semigroup(monomial_curve(*exponents))
    expected = semigroup_oracle(exponents)
    assert sg.complete
    assert sg.gaps == expected["gaps"]
    assert sg.delta == expected["delta"]
    assert sg.conductor_c == expected["conductor"]
    assert sg.gorenstein == (sg.conductor_c == 2 * sg.delta)
    assert sg.minimal_generators == expected["minimal_generators"]


def test_explicit_bound_without_certificate(monomial_curve):
    with pytest.warns(IncompleteSemigroup):
        sg = semigroup(monomial_curve(4, 6, 7), bound=8)
    assert not sg.complete
    assert sg.elements == (0, 4, 6, 7)
    assert sg.gaps == (1, 2, 3, 5)
    assert sg.gorenstein is None
    assert sg.minimal_generators is None
    with pytest.raises(InsufficientTruncation):
        minimal_generators(sg)
    with pytest.raises(ValueError):
        sg.contains(9)


def test_cap_without_certificate(monomial_curve):
    with pytest.raises(InsufficientTruncation):
        semigroup(monomial_curve(11, 12), trunc_factor=1, trunc_cap=20)


def test_family_is_specialized(branch):
    family = standardize(branch("t^4", "t^6 + (1+s6)*t^7", params=("s6",)))
    with pytest.warns(ParameterSpecialized):
        sg = semigroup(family)
    assert sg.delta == 8


def test_power_products_by_order():
    factors = [{2: 1}, {3: 1}]
    out = list(power_products(factors, [2, 3], 7))
    assert [order for order, _, _ in out] == [0, 2, 3, 4, 5, 6, 6]
    assert {alpha for _, alpha, _ in out} == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (0, 2)}
    for order, _, product in out:
        assert product == {order: 1}

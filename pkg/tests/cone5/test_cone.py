from fractions import Fraction
from itertools import combinations, product
from math import gcd

import pytest

from pydantic import ValidationError

from curvefact.branch import standardize
from curvefact.cone5 import (
    is_transversal,
    iter_generic_planes,
    normalize_direction,
    pick_generic_plane,
    secant_cone,
    value_order,
)
from curvefact.exceptions import DimensionMismatch, NonTransversal
from curvefact.models import ProjectionPlane
from curvefact.warnings import TruncatedCone


def _embedding_dimension_three(a, b, c):
    return b % a != 0 and not any((c - j * b) % a == 0 for j in range(c // b + 1))


# monomial space curves that are not plane curves in disguise
TRIPLES = [
    t
    for t in combinations(range(3, 13), 3)
    if gcd(gcd(*t[:2]), t[2]) == 1 and _embedding_dimension_three(*t)
]


@pytest.fixture(scope="module")
def cone467(monomial_curve):
    return secant_cone(monomial_curve(4, 6, 7))


def test_m467_planes(cone467):
    assert cone467.e == 4
    assert cone467.tangent == (1, 0, 0)
    assert len(cone467.planes) == 2
    first, second = cone467.planes
    assert first.direction == (0, 1, 0)
    assert first.residues == (1, 3)
    assert first.jumps == (6, 6)
    assert second.direction == (0, 0, 1)
    assert second.residues == (2,)
    assert second.jumps == (7,)
    assert not cone467.truncated


@pytest.mark.parametrize(
    "exponents,direction",
    [((4, 5, 7), (0, 1, 0)), ((5, 6, 8, 9), (0, 1, 0, 0))],
)
def test_single_plane(monomial_curve, exponents, direction):
    cone = secant_cone(monomial_curve(*exponents))
    assert cone.directions == (direction,)
    assert cone.planes[0].residues == tuple(range(1, exponents[0]))


@pytest.mark.parametrize("exponents", TRIPLES, ids=str)
def test_monomial_curves(monomial_curve, exponents):
    cone = secant_cone(monomial_curve(*exponents))
    assert len(cone.planes) <= cone.e - 1
    if gcd(exponents[0], exponents[1]) == 1:
        assert cone.directions == ((0, 1, 0),)
    else:
        assert cone.directions == ((0, 1, 0), (0, 0, 1))
    assert is_transversal(cone, pick_generic_plane(cone))


def test_directions_are_normalized(branch):
    cone = secant_cone(standardize(branch("t^3", "2*t^4", "-6*t^4 + t^5")))
    assert cone.directions == ((0, 1, -3),)
    assert normalize_direction((0, Fraction(2), 4)) == (0, 1, 2)


def test_truncated_residues(branch):
    sb = standardize(branch("t^4", "t^6 + t^9", trunc=8), trunc=8)
    with pytest.warns(TruncatedCone):
        cone = secant_cone(sb)
    assert cone.truncated_residues == (2,)
    assert cone.planes[0].residues == (1, 3)
    with pytest.warns(TruncatedCone):
        pick_generic_plane(cone)


def test_transversal_examples(cone467):
    assert is_transversal(cone467, ProjectionPlane.from_values((1, 0, 0, 0, 1, 1)))
    assert not is_transversal(cone467, ProjectionPlane.from_values((0, 1, 0, 0, 0, 1)))


def test_transversality_on_a_grid(cone467):
    checked = 0
    for z in product((-1, 0, 2), repeat=6):
        try:
            plane = ProjectionPlane.from_values(z)
        except ValidationError:
            continue
        z1, z2, z3, z4, z5, z6 = z
        expected = z1 * z6 - z3 * z4 != 0 and z1 * z5 - z2 * z4 != 0
        assert is_transversal(cone467, plane) == expected, z
        checked += 1
    assert checked > 600


@pytest.mark.parametrize("combination", [((1, 1), (1, -1)), ((2, 0), (3, 5)), ((0, 1), (1, 0))])
def test_invariant_under_recombination(cone467, combination):
    (a, b), (c, d) = combination
    for z in [(1, 0, 0, 0, 1, 1), (1, 2, 0, 0, 1, 0), (0, 1, 0, 1, 0, 1)]:
        l1, l2 = z[:3], z[3:]
        new = tuple(a * u + b * v for u, v in zip(l1, l2)) + tuple(
            c * u + d * v for u, v in zip(l1, l2)
        )
        assert is_transversal(cone467, ProjectionPlane.from_values(z)) == is_transversal(
            cone467, ProjectionPlane.from_values(new)
        )


def test_parametric_planes_are_checked_at_the_origin(cone467, poly):
    s = poly("s", ("s",))
    assert not is_transversal(cone467, ProjectionPlane.from_values((1, 0, 0, 0, s, 1 + s)))
    assert is_transversal(cone467, ProjectionPlane.from_values((1, 0, 0, 0, 1 + s, 1 - s)))


def test_dimension_mismatch(cone467):
    with pytest.raises(DimensionMismatch):
        is_transversal(cone467, ProjectionPlane.from_values((1, 0, 0, 0, 0, 1, 1, 0)))
    with pytest.raises(DimensionMismatch):
        pick_generic_plane(cone467, n=4)


def test_enumeration_order(cone467, monomial_curve, branch):
    assert value_order(2) == [0, 1, -1, 2, -2]
    planes = iter_generic_planes(cone467)
    assert str(next(planes)) == "1,0,0,0,1,1"
    assert str(next(planes)) == "1,0,0,0,1,-1"
    assert str(pick_generic_plane(cone467)) == "1,0,0,0,1,1"
    assert str(pick_generic_plane(secant_cone(monomial_curve(5, 6, 8, 9)))) == "1,0,0,0,0,1,0,0"
    plane_cone = secant_cone(standardize(branch("t^3", "t^4")))
    assert str(pick_generic_plane(plane_cone, n=2)) == "1,0,0,1"


@pytest.mark.parametrize("a8,a9", [(1, 1), (Fraction(1, 2), -3), (7, 2)])
def test_m5689_family_of_planes(monomial_curve, a8, a9):
    cone = secant_cone(monomial_curve(5, 6, 8, 9))
    assert is_transversal(cone, ProjectionPlane.from_values((1, 0, 0, 0, 0, 1, a8, a9)))


def test_no_transversal_plane(cone467):
    with pytest.raises(NonTransversal):
        pick_generic_plane(cone467, max_norm=0)


def test_plane_validation(poly):
    with pytest.raises(ValidationError, match="linearly dependent"):
        ProjectionPlane.from_values((1, 2, 3, 2, 4, 6))
    with pytest.raises(ValidationError, match="2n >= 4"):
        ProjectionPlane.from_values((1, 0, 0))
    s = poly("s", ("s",))
    plane = ProjectionPlane.from_values((1, 0, 0, s, 1, 0))
    assert plane.params == ("s",)
    assert plane.n == 3
    assert plane.at_origin() == (1, 0, 0, 0, 1, 0)

from pathlib import Path
from typing import Iterable, Sequence, Set

import pytest


@pytest.fixture(scope="session")
def top_dir() -> Path:
    """Return Path instance for the repository's top (root) directory"""
    return Path(__file__).parent.parent.resolve()


@pytest.fixture(scope="session")
def static_dir() -> Path:
    """Return Path instance for the directory of input files used by the tests"""
    return Path(__file__).parent.joinpath("static").resolve()


@pytest.fixture(scope="session")
def poly():
    """Factory parsing an expression into an MPoly in the given variables"""
    from curvefact.exprtransformers import parse_polynomial

    def _poly(text: str, variables: Sequence[str] = ("t",)):
        return parse_polynomial(text, tuple(variables))

    return _poly


@pytest.fixture(scope="session")
def branch(poly):
    """Factory for a Branch given by coordinate expressions in t and parameters"""
    from curvefact.models import Branch

    def _branch(*coords: str, params: Sequence[str] = (), name: str = "branch", trunc: int = None):
        variables = ("t",) + tuple(params)
        return Branch(
            name=name,
            coords=tuple(poly(c, variables) for c in coords),
            params=tuple(params),
            trunc=trunc,
        )

    return _branch


@pytest.fixture(scope="session")
def monomial_curve(branch):
    """Factory for the standardized monomial curve M(a_1, ..., a_n)"""
    from curvefact.branch import standardize

    def _monomial_curve(*exponents: int):
        name = "M(" + ",".join(map(str, exponents)) + ")"
        return standardize(branch(*(f"t^{a}" for a in exponents), name=name))

    return _monomial_curve


@pytest.fixture(scope="session")
def plane_branch(poly):
    """Factory for a PlaneBranch (x(t), y(t))"""
    from curvefact.models import PlaneBranch

    def _plane_branch(x: str, y: str, params: Sequence[str] = ()):
        variables = ("t",) + tuple(params)
        return PlaneBranch(x=poly(x, variables), y=poly(y, variables), params=tuple(params))

    return _plane_branch


@pytest.fixture(scope="session")
def module(plane_branch, poly):
    """Factory for ModuleData: generators over a plane branch"""
    from curvefact.models import ModuleData

    def _module(x: str, y: str, *gens: str, params: Sequence[str] = ()):
        return ModuleData(
            plane=plane_branch(x, y, params=params),
            gens=tuple(poly(g) for g in gens),
        )

    return _module


def semigroup_closure(generators: Iterable[int], bound: int) -> Set[int]:
    """Elements below `bound` of the numerical semigroup generated by `generators`,
    by brute-force closure under addition."""
    generators = sorted(set(generators))
    members = {0}
    for k in range(1, bound):
        if any(k - g in members for g in generators if g <= k):
            members.add(k)
    return members


@pytest.fixture(scope="session")
def semigroup_oracle():
    """Gaps, delta, conductor and minimal generators of a numerical semigroup,
    independently of the package"""

    def _oracle(generators: Iterable[int]):
        generators = tuple(generators)
        bound = max(generators) * min(generators) + 1
        members = semigroup_closure(generators, bound)
        gaps = tuple(k for k in range(bound) if k not in members)
        conductor = gaps[-1] + 1 if gaps else 0
        minimal = tuple(
            g
            for g in sorted(set(generators))
            if not any(h in members and g - h in members for h in range(1, g))
        )
        return {
            "gaps": gaps,
            "delta": len(gaps),
            "conductor": conductor,
            "minimal_generators": minimal,
        }

    return _oracle

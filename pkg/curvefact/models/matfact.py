# pylint: disable=no-self-argument
from enum import Enum
from typing import Optional, Tuple

from pydantic import root_validator, validator

from curvefact.exactalg import MPoly, PolyMatrix
from curvefact.models.branch import T, PlaneBranch, t_exponents
from curvefact.models.equation import ImplicitEquation
from curvefact.models.utils import CurvefactModel, StrictField

__all__ = (
    "ModuleData",
    "MatrixFactorization",
    "CheckResult",
    "MFVerification",
    "AlgebraWitness",
    "GenericProjectionWitness",
    "Verdict",
    "EquivalenceVerdict",
)


class ModuleData(CurvefactModel):
    """Generators in Q[t] of a module over the ring of a plane branch."""

    plane: PlaneBranch = StrictField(..., description="Defines O_Y through x(t) and y(t).")
    gens: Tuple[MPoly, ...] = StrictField(..., description="The generators, polynomials in t.")
    trunc: Optional[int] = StrictField(
        None, description="The truncation order the generators were computed at, if any."
    )

    @validator("gens")
    def polynomial_in_t(cls, v):
        if not v:
            raise ValueError("At least one generator is needed")
        for g in v:
            if set(g.free_vars) - {T}:
                raise ValueError(f"Generators must be polynomials in t alone, got {g}")
            if g.is_zero():
                raise ValueError("Generators must be nonzero")
        return tuple(g.with_vars((T,)) for g in v)

    @property
    def b(self) -> int:
        return len(self.gens)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(t_exponents(g)[0] for g in self.gens)


class MatrixFactorization(CurvefactModel):
    """Square matrices (d, h) with d h = h d = F Id."""

    F: ImplicitEquation = StrictField(..., description="The hypersurface equation.")
    d: PolyMatrix = StrictField(..., description="The presentation matrix.")
    h: PolyMatrix = StrictField(..., description="The complementary matrix, adj(d) up to a constant.")
    gens: Optional[ModuleData] = StrictField(
        None, description="The module generators presented by d, when known."
    )

    @root_validator(skip_on_failure=True)
    def square_and_same_size(cls, values):
        d, h = values["d"], values["h"]
        if not d.is_square() or d.shape != h.shape:
            raise ValueError(f"d and h must be square of the same size, got {d.shape} and {h.shape}")
        gens = values.get("gens")
        if gens is not None and gens.b != d.rows:
            raise ValueError(f"{gens.b} generators but d has size {d.rows}")
        return values

    @property
    def b(self) -> int:
        return self.d.rows

    @property
    def params(self) -> Tuple[str, ...]:
        return self.F.params


class CheckResult(CurvefactModel):
    name: str = StrictField(..., description="The identity checked.")
    passed: bool = StrictField(..., description="Whether it holds exactly.")
    witness: Optional[str] = StrictField(
        None, description="The first failing entry, when the check fails."
    )


class MFVerification(CurvefactModel):
    """Per-check report of [`verify_mf`][curvefact.matfact.verify.verify_mf]."""

    checks: Tuple[CheckResult, ...] = StrictField(..., description="Results in a fixed order.")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


class AlgebraWitness(CurvefactModel):
    """Outcome of the multiplicative closure test."""

    is_algebra: bool = StrictField(..., description="Whether e^-1 M is closed under multiplication.")
    identity: str = StrictField(..., description="The generator used as identity element.")
    trunc: int = StrictField(..., description="The truncation order used.")
    pair: Optional[Tuple[int, int]] = StrictField(
        None, description="Indices of the first pair of generators whose product leaves the module."
    )
    factors: Optional[Tuple[str, str]] = StrictField(
        None, description="The two factors g_i/e and g_j/e of the failing product."
    )
    product: Optional[str] = StrictField(None, description="The failing product g_i g_j / e.")


class GenericProjectionWitness(CurvefactModel):
    """Outcome of the check that a plane branch is a generic projection."""

    generic: bool = StrictField(..., description="Conjunction of the two conditions.")
    independent: Optional[bool] = StrictField(
        None, description="Whether x and y are independent modulo the square of the maximal ideal."
    )
    mu: Optional[int] = StrictField(None, description="Milnor number of the plane branch.")
    mu_bar: Optional[int] = StrictField(None, description="Milnor number of a generic projection.")
    reason: Optional[str] = StrictField(None, description="Why the check failed.")


class Verdict(Enum):
    EQUIVALENT = "Equivalent"
    INEQUIVALENT = "Inequivalent"
    INCONCLUSIVE = "Inconclusive"


class EquivalenceVerdict(CurvefactModel):
    """Outcome of the bounded search for (phi, psi) with phi d = d' psi."""

    verdict: Verdict = StrictField(..., description="Equivalent, Inequivalent or Inconclusive.")
    phi: Optional[PolyMatrix] = StrictField(None, description="Left witness, invertible at the origin.")
    psi: Optional[PolyMatrix] = StrictField(None, description="Right witness, invertible at the origin.")
    certificate: Optional[str] = StrictField(
        None, description="The invariant that differs, for Inequivalent verdicts."
    )
    degree: int = StrictField(..., description="The degree cap of the search.")

    @root_validator(skip_on_failure=True)
    def witnesses_for_equivalent(cls, values):
        if values["verdict"] == Verdict.EQUIVALENT and (values["phi"] is None or values["psi"] is None):
            raise ValueError("An Equivalent verdict needs both witnesses")
        if values["verdict"] == Verdict.INEQUIVALENT and not values["certificate"]:
            raise ValueError("An Inequivalent verdict needs a certificate")
        return values

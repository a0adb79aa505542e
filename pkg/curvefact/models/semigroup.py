# pylint: disable=no-self-argument
from typing import Optional, Tuple

from pydantic import root_validator

from curvefact.models.utils import CurvefactModel, StrictField

__all__ = ("SemigroupData", "PuiseuxData", "DeltaConsistency")


class SemigroupData(CurvefactModel):
    """The semigroup of values of a branch, as far as it is known below `bound`."""

    e: int = StrictField(..., description="Multiplicity, the least nonzero element.")
    bound: int = StrictField(..., description="The truncation N; elements are listed below N.")
    elements: Tuple[int, ...] = StrictField(..., description="The elements of the semigroup in [0, N), sorted.")
    gaps: Tuple[int, ...] = StrictField(
        ..., description="Non-negative integers below N that are not values, sorted."
    )
    delta: int = StrictField(..., description="The singularity order, the number of gaps.")
    frobenius: int = StrictField(..., description="The largest gap, -1 when there is none.")
    conductor_c: int = StrictField(..., description="The conductor, frobenius + 1.")
    gorenstein: Optional[bool] = StrictField(
        None,
        description="Whether the conductor equals 2 delta; only asserted for complete data.",
    )
    complete: bool = StrictField(
        ...,
        description="True when a run of e consecutive elements below N certifies every gap.",
    )
    minimal_generators: Optional[Tuple[int, ...]] = StrictField(
        None, description="The minimal generating set, when the data is complete."
    )

    @root_validator(skip_on_failure=True)
    def counts_agree(cls, values):
        if values["delta"] != len(values["gaps"]):
            raise ValueError(f"delta = {values['delta']} but there are {len(values['gaps'])} gaps")
        if values["conductor_c"] != values["frobenius"] + 1:
            raise ValueError("The conductor must be frobenius + 1")
        if values["complete"] and values["gorenstein"] is not None:
            if values["gorenstein"] != (values["conductor_c"] == 2 * values["delta"]):
                raise ValueError("gorenstein must be equivalent to conductor == 2 delta")
        return values

    def contains(self, k: int) -> bool:
        """Membership for any `k`; above the conductor of complete data everything is a value."""
        if k < 0:
            return False
        if k < self.bound:
            return k in self.elements
        if self.complete:
            return True
        raise ValueError(f"{k} is beyond the bound {self.bound} of incomplete semigroup data")


class PuiseuxData(CurvefactModel):
    """Equisingularity data of a plane branch."""

    e: int = StrictField(..., description="Multiplicity.")
    char_exponents: Tuple[int, ...] = StrictField(
        ..., description="Characteristic exponents beta_1 < ... < beta_g, over the denominator e."
    )
    gcd_seq: Tuple[int, ...] = StrictField(..., description="d_0 = e, d_i = gcd(d_{i-1}, beta_i), ending at 1.")
    sg_generators: Tuple[int, ...] = StrictField(
        ..., description="The minimal generators of the semigroup of values."
    )
    mult_sequence: Tuple[int, ...] = StrictField(
        ..., description="Multiplicities of the successive blow-ups, down to the first 1."
    )
    delta: int = StrictField(..., description="Sum of m(m-1)/2 over the multiplicity sequence.")
    mu: int = StrictField(..., description="The Milnor number, 2 delta for a branch.")
    conductor_c: int = StrictField(..., description="The conductor from the semigroup generators.")

    @root_validator(skip_on_failure=True)
    def sequence_ends_at_one(cls, values):
        if values["gcd_seq"][-1] != 1:
            raise ValueError(f"The gcd sequence {values['gcd_seq']} must end at 1")
        if values["mu"] != 2 * values["delta"]:
            raise ValueError("mu must equal 2 delta for a branch")
        return values


class DeltaConsistency(CurvefactModel):
    """Comparison of the two ways of computing delta of a plane branch."""

    delta_gaps: int = StrictField(..., description="delta from counting semigroup gaps.")
    delta_mult: int = StrictField(..., description="delta from the multiplicity sequence.")
    conductor_gaps: int = StrictField(..., description="Conductor from the gaps.")
    conductor_formula: int = StrictField(
        ..., description="Conductor from the characteristic semigroup generators."
    )
    consistent: bool = StrictField(..., description="Whether both deltas and both conductors agree.")

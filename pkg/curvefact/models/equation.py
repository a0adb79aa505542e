# pylint: disable=no-self-argument
from typing import Optional, Tuple

from pydantic import validator

from curvefact.exactalg import MPoly
from curvefact.models.utils import CurvefactModel, StrictField

__all__ = ("Normalization", "ImplicitEquation", "DeltaBounds")


class Normalization(CurvefactModel):
    """Record of the unit normalization applied to a resultant."""

    monomial: str = StrictField(..., description="The monomial whose coefficient was scaled to 1, e.g. `y^4`.")
    divisor: MPoly = StrictField(..., description="The coefficient the resultant was divided by.")
    exact: bool = StrictField(
        ..., description="False when the division used a truncated series in the parameters."
    )
    param_order: Optional[int] = StrictField(
        None,
        description="For inexact normalizations, terms of parameter degree below this order are exact.",
    )


class ImplicitEquation(CurvefactModel):
    """An equation F(x, y) of a plane branch, possibly depending on parameters."""

    F: MPoly = StrictField(..., description="The equation in x, y and the parameters.")
    params: Tuple[str, ...] = StrictField((), description="Deformation parameters occurring in F.")
    normalization: Normalization = StrictField(..., description="The unit normalization applied.")
    verified: bool = StrictField(
        False, description="Whether F(x(t), y(t)) = 0 was checked by exact substitution."
    )

    @validator("F")
    def not_a_unit(cls, v):
        if v.is_zero() or v.constant_term:
            raise ValueError(f"{v} does not define a curve germ at the origin")
        return v

    @property
    def context(self) -> Tuple[str, ...]:
        return ("x", "y") + self.params

    def __str__(self) -> str:
        return str(self.F)


class DeltaBounds(CurvefactModel):
    """The inequalities delta_X <= delta_Y <= (e - 1) delta_X - (e - 1)(e - 2)/2."""

    e: int = StrictField(..., description="Multiplicity of the space branch.")
    delta_x: int = StrictField(..., description="delta of the branch.")
    delta_y: int = StrictField(..., description="delta of its generic plane projection.")
    upper: int = StrictField(..., description="The upper bound (e - 1) delta_X - C(e - 1, 2).")
    lower_ok: bool = StrictField(..., description="delta_X <= delta_Y")
    upper_ok: bool = StrictField(..., description="delta_Y <= upper")

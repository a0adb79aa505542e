# pylint: disable=no-self-argument
from fractions import Fraction
from typing import Sequence, Tuple, Union

from pydantic import root_validator, validator

from curvefact.exactalg import MPoly
from curvefact.models.utils import CurvefactModel, Rational, StrictField

__all__ = ("ConePlane", "SecantCone", "ProjectionPlane")


class ConePlane(CurvefactModel):
    """One plane of the secant cone, spanned by the tangent line and `direction`."""

    direction: Tuple[Rational, ...] = StrictField(
        ..., description="The secondary direction (0, b_2, ..., b_n), first nonzero entry scaled to 1."
    )
    residues: Tuple[int, ...] = StrictField(
        ..., description="Residues k mod e of the roots of unity producing this plane."
    )
    jumps: Tuple[int, ...] = StrictField(
        ..., description="The jump exponent j for each residue, in the same order."
    )

    @validator("direction")
    def secondary(cls, v):
        if v[0] != 0:
            raise ValueError(f"Secondary directions have first coordinate 0, got {v}")
        if not any(v):
            raise ValueError("Secondary directions are nonzero")
        return v


class SecantCone(CurvefactModel):
    """The cone of limits of secants of a standardized branch: a union of 2-planes
    through the tangent line."""

    e: int = StrictField(..., description="Multiplicity.")
    n: int = StrictField(..., description="Ambient dimension.")
    trunc: int = StrictField(..., description="Truncation order of the support examined.")
    planes: Tuple[ConePlane, ...] = StrictField(..., description="The planes, in order of first residue.")
    truncated_residues: Tuple[int, ...] = StrictField(
        (), description="Residues with no jump exponent below the truncation."
    )

    @root_validator(skip_on_failure=True)
    def at_most_e_minus_one_planes(cls, values):
        if len(values["planes"]) > max(values["e"] - 1, 0):
            raise ValueError(f"At most e - 1 = {values['e'] - 1} planes, got {len(values['planes'])}")
        residues = [k for p in values["planes"] for k in p.residues] + list(
            values["truncated_residues"]
        )
        if sorted(residues) != list(range(1, values["e"])):
            raise ValueError(f"Residues {sorted(residues)} do not partition 1..{values['e'] - 1}")
        return values

    @property
    def tangent(self) -> Tuple[Fraction, ...]:
        return (Fraction(1),) + (Fraction(0),) * (self.n - 1)

    @property
    def directions(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(p.direction for p in self.planes)

    @property
    def truncated(self) -> bool:
        return bool(self.truncated_residues)


class ProjectionPlane(CurvefactModel):
    """A pair of linear forms `L1 = z_1 x_1 + ... + z_n x_n` and
    `L2 = z_{n+1} x_1 + ... + z_{2n} x_n`.

    Coefficients may depend polynomially on deformation parameters.

    """

    z: Tuple[MPoly, ...] = StrictField(..., description="The 2n coefficients z_1, ..., z_2n.")

    @validator("z", pre=True)
    def coerce_numbers(cls, v):
        return tuple(MPoly.const(c) if isinstance(c, (int, Fraction)) else c for c in v)

    @validator("z")
    def independent_forms(cls, v):
        if len(v) < 4 or len(v) % 2:
            raise ValueError(f"A projection plane needs 2n >= 4 coefficients, got {len(v)}")
        n = len(v) // 2
        l1, l2 = v[:n], v[n:]
        if all(
            (l1[i] * l2[j] - l1[j] * l2[i]).is_zero() for i in range(n) for j in range(i + 1, n)
        ):
            raise ValueError(f"The forms {l1} and {l2} are linearly dependent")
        return v

    @classmethod
    def from_values(cls, values: Sequence[Union[int, Fraction, MPoly]]) -> "ProjectionPlane":
        return cls(z=tuple(values))

    @property
    def n(self) -> int:
        return len(self.z) // 2

    @property
    def L1(self) -> Tuple[MPoly, ...]:
        return self.z[: self.n]

    @property
    def L2(self) -> Tuple[MPoly, ...]:
        return self.z[self.n :]

    @property
    def params(self) -> Tuple[str, ...]:
        names = []
        for c in self.z:
            for v in c.free_vars:
                if v not in names:
                    names.append(v)
        return tuple(names)

    def at_origin(self) -> Tuple[Fraction, ...]:
        """The coefficients with every parameter set to 0."""
        return tuple(c.subs({s: 0 for s in c.vars}).constant_term for c in self.z)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.z)

# pylint: disable=no-self-argument
from functools import reduce
from math import gcd
from typing import Dict, Optional, Tuple

from pydantic import root_validator, validator

from curvefact.exactalg import MPoly, TSeries
from curvefact.models.utils import CurvefactModel, StrictField

__all__ = ("T", "Branch", "StandardBranch", "PlaneBranch", "at_origin", "t_exponents")

T = "t"
"""Name of the uniformizing parameter."""


def at_origin(p: MPoly, params: Tuple[str, ...]) -> MPoly:
    """Specialize every deformation parameter of `p` to 0."""
    return p.subs({s: 0 for s in params}) if params else p


def t_exponents(p: MPoly) -> Tuple[int, ...]:
    """Exponents of `t` occurring in a polynomial, sorted."""
    if T not in p.vars:
        return (0,) if p.terms else ()
    i = p.vars.index(T)
    return tuple(sorted({exp[i] for exp in p.terms}))


def _context(values: dict, *keys: str) -> dict:
    params = tuple(values.get("params") or ())
    ctx = (T,) + params
    for key in keys:
        if values.get(key) is None:
            continue
        polys = values[key] if isinstance(values[key], tuple) else (values[key],)
        for p in polys:
            extra = [v for v in p.free_vars if v not in ctx]
            if extra:
                raise ValueError(
                    f"{p} uses {', '.join(extra)}; only t and the parameters {params} are allowed"
                )
        converted = tuple(p.with_vars(ctx) for p in polys)
        values[key] = converted if isinstance(values[key], tuple) else converted[0]
    return values


def _check_injective(coords: Tuple[MPoly, ...], params: Tuple[str, ...]) -> None:
    special = [at_origin(c, params) for c in coords]
    if all(c.is_zero() for c in special):
        raise ValueError("At s = 0 every coordinate vanishes identically.")
    exps = set()
    for c in special:
        if c.constant_term:
            raise ValueError(f"Coordinate {c} has t-order 0 at s = 0; it must pass through the origin.")
        exps.update(t_exponents(c))
    if reduce(gcd, exps) != 1:
        raise ValueError(
            f"The t-exponents {sorted(exps)} have gcd {reduce(gcd, exps)} at s = 0: "
            "the parametrization is not injective."
        )


class Branch(CurvefactModel):
    """A parametrization `t -> (f_1(t), ..., f_n(t))` of an irreducible curve germ,
    possibly depending polynomially on deformation parameters."""

    name: str = StrictField("branch", description="A label used in reports.")
    coords: Tuple[MPoly, ...] = StrictField(
        ...,
        description="The coordinates as polynomials in t and the deformation parameters.",
    )
    params: Tuple[str, ...] = StrictField(
        (), description="Ordered names of the deformation parameters s_1, ..., s_m."
    )
    trunc: Optional[int] = StrictField(
        None,
        description=(
            "Working truncation order N. `None` means the coordinates are exact polynomials; "
            "otherwise they are known modulo t^N."
        ),
    )

    @validator("params")
    def params_are_not_t(cls, v):
        if T in v:
            raise ValueError("t is reserved for the uniformizer and cannot be a parameter.")
        if len(set(v)) != len(v):
            raise ValueError(f"Duplicate parameter names in {v}")
        return v

    @validator("coords")
    def at_least_two_coordinates(cls, v):
        if len(v) < 2:
            raise ValueError(f"A branch needs at least 2 coordinates, got {len(v)}")
        return v

    @validator("trunc")
    def trunc_is_positive(cls, v):
        if v is not None and v < 2:
            raise ValueError(f"trunc must be at least 2, not {v}")
        return v

    @root_validator(skip_on_failure=True)
    def parametrizes_a_branch(cls, values):
        values = _context(values, "coords")
        _check_injective(values["coords"], values["params"])
        return values

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def exact(self) -> bool:
        return self.trunc is None

    @property
    def is_family(self) -> bool:
        return bool(self.params)

    @property
    def context(self) -> Tuple[str, ...]:
        return (T,) + self.params

    def at_origin(self) -> "Branch":
        """The fibre at s = 0, without parameters."""
        return Branch(
            name=self.name,
            coords=tuple(at_origin(c, self.params).drop_vars(self.params) for c in self.coords),
            params=(),
            trunc=self.trunc,
        )

    def orders(self) -> Tuple[Optional[int], ...]:
        """The t-order of each coordinate at s = 0 (`None` for a vanishing coordinate)."""
        out = []
        for c in self.coords:
            exps = t_exponents(at_origin(c, self.params))
            out.append(exps[0] if exps else None)
        return tuple(out)


class StandardBranch(CurvefactModel):
    """A branch in standard form: the first coordinate is exactly t^e and every
    other coordinate has t-order at least e + 1."""

    source: Branch = StrictField(..., description="The branch this standard form was computed from.")
    coords: Tuple[MPoly, ...] = StrictField(..., description="The standardized coordinates.")
    params: Tuple[str, ...] = StrictField((), description="Deformation parameters, as in the source.")
    e: int = StrictField(..., description="The multiplicity: coordinate 1 equals t^e.")
    trunc: int = StrictField(
        ..., description="Truncation order: the coordinates are known modulo t^trunc."
    )
    exact: bool = StrictField(
        True,
        description="Whether the coordinates are exact polynomials (no uniformizer change or truncated input).",
    )
    transforms: Tuple[str, ...] = StrictField(
        (), description="Human-readable record of the transformations applied to the source."
    )

    @root_validator(skip_on_failure=True)
    def is_standard(cls, values):
        values = _context(values, "coords")
        coords, e = values["coords"], values["e"]
        tee = MPoly.monomial({T: e}, (T,) + values["params"])
        if coords[0] != tee:
            raise ValueError(f"The first coordinate must be t^{e}, got {coords[0]}")
        for c in coords[1:]:
            low = [j for j in t_exponents(c) if j <= e]
            if low:
                raise ValueError(f"Coordinate {c} has terms of t-order {low} <= e = {e}")
        if values["trunc"] <= e:
            raise ValueError(f"trunc = {values['trunc']} must exceed e = {e}")
        return values

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def is_family(self) -> bool:
        return bool(self.params)

    @property
    def context(self) -> Tuple[str, ...]:
        return (T,) + self.params

    @property
    def support(self) -> Dict[int, Tuple[MPoly, ...]]:
        """The coefficient vectors `(b_{j,2}, ..., b_{j,n})` for `e < j < trunc`, omitting zero vectors."""
        out = {}
        for j in range(self.e + 1, self.trunc):
            vec = tuple(c.coeff(T, j) for c in self.coords[1:])
            if any(not b.is_zero() for b in vec):
                out[j] = vec
        return out

    def series(self, trunc: int = None, params: Dict[str, int] = None) -> Tuple[TSeries, ...]:
        """The coordinates of the fibre at `params` (default s = 0) as truncated series."""
        trunc = self.trunc if trunc is None else trunc
        if trunc > self.trunc and not self.exact:
            raise ValueError(
                f"Coordinates are only known modulo t^{self.trunc}; use at_trunc({trunc}) first."
            )
        assignment = {s: 0 for s in self.params}
        assignment.update(params or {})
        return tuple(
            c.subs(assignment).drop_vars(self.params).to_series(T, trunc) for c in self.coords
        )

    def at_trunc(self, trunc: int) -> "StandardBranch":
        """The same standard form with coordinates known modulo t^trunc.

        Exact forms are just relabelled; otherwise the source is standardized again.

        """
        if trunc == self.trunc:
            return self
        if self.exact:
            return self.copy(update={"trunc": trunc})
        from curvefact.branch.standard import standardize

        # A change of uniformizer costs e - 1 coefficients
        result = standardize(self.source, trunc=trunc)
        if result.trunc < trunc:
            result = standardize(self.source, trunc=2 * trunc - result.trunc)
        return result

    def as_branch(self) -> Branch:
        return Branch(
            name=self.source.name,
            coords=self.coords,
            params=self.params,
            trunc=None if self.exact else self.trunc,
        )


class PlaneBranch(CurvefactModel):
    """A plane parametrization `(x(t), y(t))`, typically the image of a projection."""

    name: str = StrictField("plane branch", description="A label used in reports.")
    x: MPoly = StrictField(..., description="x(t), a polynomial in t and the parameters.")
    y: MPoly = StrictField(..., description="y(t), a polynomial in t and the parameters.")
    params: Tuple[str, ...] = StrictField((), description="Deformation parameters.")
    trunc: Optional[int] = StrictField(
        None, description="Truncation order, `None` for exact polynomial coordinates."
    )

    @root_validator(skip_on_failure=True)
    def passes_through_origin(cls, values):
        values = _context(values, "x", "y")
        for c in (values["x"], values["y"]):
            if at_origin(c, values["params"]).constant_term:
                raise ValueError(f"{c} has t-order 0 at s = 0")
        return values

    @property
    def exact(self) -> bool:
        return self.trunc is None

    @property
    def context(self) -> Tuple[str, ...]:
        return (T,) + self.params

    @property
    def support_gcd(self) -> int:
        """The gcd of all t-exponents of x and y at s = 0."""
        exps = set()
        for c in (self.x, self.y):
            exps.update(t_exponents(at_origin(c, self.params)))
        return reduce(gcd, exps, 0)

    @property
    def is_reduced(self) -> bool:
        return self.support_gcd == 1

    def at_origin(self) -> "PlaneBranch":
        return PlaneBranch(
            name=self.name,
            x=at_origin(self.x, self.params).drop_vars(self.params),
            y=at_origin(self.y, self.params).drop_vars(self.params),
            trunc=self.trunc,
        )

    def as_branch(self) -> Branch:
        return Branch(name=self.name, coords=(self.x, self.y), params=self.params, trunc=self.trunc)

"""Evaluation of families at explicit parameter values."""
from fractions import Fraction
from functools import singledispatch
from typing import Mapping, Sequence, Tuple, Union

from curvefact.exactalg import MPoly, PolyMatrix
from curvefact.exceptions import MissingParameter
from curvefact.models import (
    Branch,
    ImplicitEquation,
    MatrixFactorization,
    ModuleData,
    PlaneBranch,
    StandardBranch,
    T,
)

__all__ = ("specialize", "free_parameters")

Assignment = Mapping[str, Union[int, Fraction]]


def free_parameters(p: Union[MPoly, PolyMatrix]) -> Tuple[str, ...]:
    """Variables of a polynomial or matrix other than x, y and t."""
    if isinstance(p, PolyMatrix):
        used = set()
        for entry in p:
            used.update(entry.free_vars)
        return tuple(v for v in p.vars if v in used and v not in ("x", "y", T))
    return tuple(v for v in p.free_vars if v not in ("x", "y", T))


def _check(params: Sequence[str], assignment: Assignment) -> dict:
    missing = [s for s in params if s not in assignment]
    if missing:
        raise MissingParameter(f"No value given for {', '.join(missing)}")
    return {s: Fraction(assignment[s]) for s in params}


def _fibre(p: MPoly, values: dict) -> MPoly:
    return p.subs(values).drop_vars(values)


@singledispatch
def specialize(obj, assignment: Assignment):
    """Substitute rational values for every deformation parameter of `obj`.

    Polynomials, matrices, branches, implicit equations, module data and matrix
    factorizations are supported; the result has the same type and no parameters.

    Raises:
        MissingParameter: If `assignment` leaves a parameter without a value.

    """
    raise TypeError(f"Cannot specialize a {type(obj).__name__}")


@specialize.register
def _(obj: MPoly, assignment: Assignment) -> MPoly:
    values = _check(free_parameters(obj), assignment)
    return _fibre(obj, values) if values else obj


@specialize.register
def _(obj: PolyMatrix, assignment: Assignment) -> PolyMatrix:
    values = _check(free_parameters(obj), assignment)
    if not values:
        return obj
    ctx = tuple(v for v in obj.vars if v not in values)
    return PolyMatrix(
        [[_fibre(entry, values) for entry in obj.row(i)] for i in range(obj.rows)], ctx
    )


@specialize.register
def _(obj: Branch, assignment: Assignment) -> Branch:
    values = _check(obj.params, assignment)
    if not values:
        return obj
    return Branch(
        name=obj.name,
        coords=tuple(_fibre(c, values) for c in obj.coords),
        trunc=obj.trunc,
    )


@specialize.register
def _(obj: StandardBranch, assignment: Assignment) -> StandardBranch:
    values = _check(obj.params, assignment)
    if not values:
        return obj
    label = ", ".join(f"{s} = {v}" for s, v in values.items())
    return StandardBranch(
        source=specialize(obj.source, values),
        coords=tuple(_fibre(c, values) for c in obj.coords),
        e=obj.e,
        trunc=obj.trunc,
        exact=obj.exact,
        transforms=obj.transforms + (f"specialized at {label}",),
    )


@specialize.register
def _(obj: PlaneBranch, assignment: Assignment) -> PlaneBranch:
    values = _check(obj.params, assignment)
    if not values:
        return obj
    return PlaneBranch(
        name=obj.name,
        x=_fibre(obj.x, values),
        y=_fibre(obj.y, values),
        trunc=obj.trunc,
    )


@specialize.register
def _(obj: ImplicitEquation, assignment: Assignment) -> ImplicitEquation:
    values = _check(obj.params, assignment)
    if not values:
        return obj
    divisor = obj.normalization.divisor
    return ImplicitEquation(
        F=_fibre(obj.F, values),
        normalization=obj.normalization.copy(
            update={"divisor": divisor.subs(values).drop_vars(values)}
        ),
        verified=obj.verified,
    )


@specialize.register
def _(obj: ModuleData, assignment: Assignment) -> ModuleData:
    if not obj.plane.params:
        return obj
    return ModuleData(plane=specialize(obj.plane, assignment), gens=obj.gens, trunc=obj.trunc)


@specialize.register
def _(obj: MatrixFactorization, assignment: Assignment) -> MatrixFactorization:
    params = merge_params(obj)
    _check(params, assignment)
    if not params:
        return obj
    return MatrixFactorization(
        F=specialize(obj.F, assignment),
        d=specialize(obj.d, assignment),
        h=specialize(obj.h, assignment),
        gens=None if obj.gens is None else specialize(obj.gens, assignment),
    )


def merge_params(mf: MatrixFactorization) -> Tuple[str, ...]:
    out = list(mf.F.params)
    for s in free_parameters(mf.d) + free_parameters(mf.h):
        if s not in out:
            out.append(s)
    return tuple(out)

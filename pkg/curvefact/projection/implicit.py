"""Equations of plane branches by elimination of `t`."""
import warnings
from typing import Sequence, Tuple

from curvefact.config import CONFIG
from curvefact.exactalg import MPoly, sylvester_resultant
from curvefact.exceptions import (
    NotDivisible,
    NotPolynomialParametrization,
    VerificationFailed,
)
from curvefact.models import ImplicitEquation, Normalization, PlaneBranch, T
from curvefact.warnings import NonExactNormalization
from curvefact.projection.logger import LOGGER

__all__ = ("implicitize", "normalize_equation", "param_series_inverse")

XY = ("x", "y")


def param_series_inverse(c: MPoly, params: Sequence[str], order: int) -> MPoly:
    """The inverse of a unit of the parameter ring, as a polynomial keeping every term of
    total parameter degree below `order`.

    Raises:
        VerificationFailed: If `c` does not have a nonzero constant term.

    """
    c0 = c.constant_term
    if not c0:
        raise VerificationFailed(f"{c} is not a unit in the parameter ring")
    nilpotent = (c - c0) * (-1 / c0)
    inv = MPoly.const(1, c.vars)
    power = MPoly.const(1, c.vars)
    for _ in range(1, order):
        power = (power * nilpotent).truncate_degree(params, order)
        if power.is_zero():
            break
        inv = inv + power
    return inv * (1 / c0)


def normalize_equation(
    R: MPoly, params: Sequence[str] = (), param_order: int = None
) -> Tuple[MPoly, Normalization]:
    """Scale `R` so that the coefficient of its pure power `y^k` is 1.

    The division is exact whenever the coefficient divides `R`. Otherwise the
    coefficient is inverted as a series in the parameters and every term of parameter
    degree `param_order` or more is dropped, with a `NonExactNormalization` warning.

    Parameters:
        R: A polynomial in x, y and the parameters.
        params: The parameter names.
        param_order: Truncation order for the parameter series.

    Returns:
        The normalized polynomial and the record of the normalization.

    """
    param_order = CONFIG.param_order if param_order is None else param_order
    k = R.degree("y")
    c = R.coefficient_in({"x": 0, "y": k}, XY)
    monomial = "y" if k == 1 else f"y^{k}"
    if c.is_zero():
        raise VerificationFailed(f"{R} has no pure power of y")
    if c.is_constant():
        return R * (1 / c.constant_term), Normalization(
            monomial=monomial, divisor=c, exact=True
        )
    try:
        return R.divexact(c), Normalization(monomial=monomial, divisor=c, exact=True)
    except NotDivisible:
        pass
    warnings.warn(
        NonExactNormalization(
            f"The coefficient {c} of {monomial} does not divide the equation; "
            f"it is inverted modulo parameter degree {param_order}."
        )
    )
    F = (R * param_series_inverse(c, params, param_order)).truncate_degree(params, param_order)
    return F, Normalization(monomial=monomial, divisor=c, exact=False, param_order=param_order)


def implicitize(pb: PlaneBranch, param_order: int = None) -> ImplicitEquation:
    """The equation of a plane branch given by polynomials.

    `F = Res_t(x - x(t), y - y(t))`, normalized by
    [`normalize_equation`][curvefact.projection.implicit.normalize_equation], then checked
    by substituting the parametrization.

    Raises:
        NotPolynomialParametrization: If the coordinates are truncated series.
        VerificationFailed: If `F(x(t), y(t))` does not vanish.

    """
    if not pb.exact:
        raise NotPolynomialParametrization(
            f"{pb.name} is known modulo t^{pb.trunc} only; elimination needs polynomials"
        )
    param_order = CONFIG.param_order if param_order is None else param_order
    ctx = XY + pb.params + (T,)
    X = MPoly.var("x", ctx) - pb.x.with_vars(ctx)
    Y = MPoly.var("y", ctx) - pb.y.with_vars(ctx)
    R = sylvester_resultant(X, Y, T)
    F, normalization = normalize_equation(R, pb.params, param_order)
    F = F.with_vars(XY + pb.params)

    residual = F.subs({"x": pb.x, "y": pb.y})
    if not normalization.exact:
        residual = residual.truncate_degree(pb.params, param_order)
    if not residual.is_zero():
        raise VerificationFailed(f"F(x(t), y(t)) = {residual} for F = {F}")
    LOGGER.debug("%s: F = %s", pb.name, F)
    return ImplicitEquation(
        F=F, params=pb.params, normalization=normalization, verified=True
    )

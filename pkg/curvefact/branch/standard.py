"""Standard form of a parametrized branch.

A branch is in standard form when its first coordinate is exactly `t^e` and all
other coordinates have t-order greater than `e`. Three changes get there:

1. permute and scale the ambient coordinates so that coordinate 1 has the least
   order `e` with leading coefficient 1;
2. change the uniformizer, `t -> u = t (x_1 / t^e)^(1/e)`, so that `x_1 = u^e`;
3. replace `x_i` by `x_i - lambda_i x_1` to remove the `t^e` terms.

Step 2 turns polynomials into truncated series: the truncation drops by `e - 1`.

"""
from typing import List

from curvefact.config import CONFIG
from curvefact.exactalg import MPoly, TSeries, series_compose, series_eth_root, series_reverse
from curvefact.exceptions import InsufficientTruncation, StandardizationError
from curvefact.models import Branch, StandardBranch, T, t_exponents
from curvefact.branch.logger import LOGGER

__all__ = ("standardize", "multiplicity", "default_trunc")


def default_trunc(b: Branch, trunc_factor: int = None, trunc_cap: int = None) -> int:
    """`trunc_factor * a * b` for the two smallest coordinate orders `a <= b`, capped.

    For exact polynomial branches the result is at least one more than the t-degree.

    """
    trunc_factor = CONFIG.trunc_factor if trunc_factor is None else trunc_factor
    trunc_cap = CONFIG.trunc_cap if trunc_cap is None else trunc_cap
    orders = sorted(o for o in b.orders() if o is not None)
    a = orders[0]
    second = orders[1] if len(orders) > 1 else orders[0]
    n = min(trunc_factor * a * second, trunc_cap)
    if b.exact:
        n = max(n, max(c.degree(T) for c in b.coords) + 1)
    if b.trunc is not None:
        n = min(n, b.trunc)
    return n


def _low_terms(c: MPoly, below: int) -> List[int]:
    return [j for j in t_exponents(c) if j < below]


def standardize(b: Branch, trunc: int = None) -> StandardBranch:
    """Bring a branch into standard form.

    Parameters:
        b: The branch. For families the coordinate of least order must have a
            parameter-free leading coefficient.
        trunc: The working truncation order; defaults to
            [`default_trunc`][curvefact.branch.standard.default_trunc].

    Raises:
        InsufficientTruncation: If the multiplicity is not below the truncation.
        StandardizationError: If a family needs a parametric scaling or a change of
            uniformizer, or if terms of order below `e` survive in the family.

    Returns:
        The standard form, recording the transformations used.

    """
    if trunc is None:
        trunc = default_trunc(b)
    elif b.trunc is not None and trunc > b.trunc:
        raise InsufficientTruncation(
            f"{b.name} is only known modulo t^{b.trunc}; cannot standardize at {trunc}"
        )
    exact = b.exact
    params = b.params
    ctx = b.context
    transforms = []

    orders = b.orders()
    e = min(o for o in orders if o is not None)
    if e >= trunc:
        raise InsufficientTruncation(
            f"The multiplicity {e} of {b.name} is not below the truncation {trunc}"
        )
    first = orders.index(e)
    coords = [b.coords[first]] + [c for i, c in enumerate(b.coords) if i != first]
    if first:
        transforms.append(f"move x{first + 1} to the first position")

    lead = coords[0].coeff(T, e)
    if not lead.is_constant():
        raise StandardizationError(
            f"The leading coefficient {lead} of {coords[0]} depends on the parameters"
        )
    for c in coords:
        low = _low_terms(c, e)
        if low:
            raise StandardizationError(
                f"{c} has terms of t-order {low} below the multiplicity {e} in the family"
            )
    a = lead.constant_term
    if a != 1:
        coords[0] = coords[0] * (1 / a)
        transforms.append(f"x1 -> x1 / {a}")

    tee = MPoly.monomial({T: e}, ctx)
    if coords[0] != tee:
        if params:
            raise StandardizationError(
                "Changing the uniformizer of a family is not supported; the coordinate of "
                f"least order must be exactly a multiple of t^{e}"
            )
        f = coords[0].to_series(T, trunc)
        w = TSeries(f.coeffs[e:])
        u = series_eth_root(w, e).shift(1)
        g = series_reverse(u)
        new_trunc = g.trunc
        if e >= new_trunc:
            raise InsufficientTruncation(
                f"After the change of uniformizer only {new_trunc} coefficients remain, "
                f"not enough for multiplicity {e}"
            )
        LOGGER.debug("Uniformizer change for %s: truncation %d -> %d", b.name, trunc, new_trunc)
        coords = [tee] + [
            MPoly.from_series(series_compose(c.to_series(T, trunc), g), T, ctx)
            for c in coords[1:]
        ]
        transforms.append(f"t -> u = t*(x1/t^{e})^(1/{e})")
        trunc = new_trunc
        exact = False

    for i in range(1, len(coords)):
        lam = coords[i].coeff(T, e)
        if not lam.is_zero():
            coords[i] = coords[i] - lam * tee
            transforms.append(f"x{i + 1} -> x{i + 1} - ({lam})*x1")
        if not exact:
            coords[i] = coords[i].with_vars(ctx)
            coords[i] = MPoly(
                {exp: c for exp, c in coords[i].terms.items() if exp[0] < trunc}, ctx
            )

    return StandardBranch(
        source=b,
        coords=tuple(coords),
        params=params,
        e=e,
        trunc=trunc,
        exact=exact,
        transforms=tuple(transforms),
    )


def multiplicity(b: StandardBranch) -> int:
    """The multiplicity `e`, the least order of an element of the maximal ideal."""
    return b.e


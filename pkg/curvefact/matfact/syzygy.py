"""Relations `sum a_i(x, y) g_i = 0` among module generators, by exact linear algebra."""
import itertools
from typing import Dict, List, Sequence, Tuple

from curvefact.config import CONFIG
from curvefact.exactalg import MPoly, merge_vars, q_nullspace
from curvefact.models import ImplicitEquation, ModuleData, T
from curvefact.matfact.logger import LOGGER

__all__ = (
    "syzygy_search",
    "syzygy_residual",
    "xy_monomials",
    "param_monomials",
    "XY",
)

XY = ("x", "y")

Syzygy = Tuple[MPoly, ...]


def xy_monomials(degree: int, low: int = 1) -> List[Tuple[int, int]]:
    """Exponents `(a, c)` of `x^a y^c` with `low <= a + c <= degree`, graded, x first."""
    return [(a, k - a) for k in range(low, degree + 1) for a in range(k, -1, -1)]


def param_monomials(params: Sequence[str], degree: int) -> List[Tuple[int, ...]]:
    """Exponent vectors of parameter monomials of degree at most `degree`, graded."""
    out = []
    for k in range(degree + 1):
        level = set()
        for combo in itertools.combinations_with_replacement(range(len(params)), k):
            exp = [0] * len(params)
            for i in combo:
                exp[i] += 1
            level.add(tuple(exp))
        out.extend(sorted(level, reverse=True))
    return out


def _module_params(m: ModuleData, F: ImplicitEquation = None) -> Tuple[str, ...]:
    return merge_vars(m.plane.params, F.params if F is not None else ())


def syzygy_residual(column: Sequence[MPoly], m: ModuleData) -> MPoly:
    """`sum column_i(x(t), y(t)) g_i(t)`, which vanishes exactly for a syzygy."""
    X, Y = m.plane.x, m.plane.y
    out = MPoly.zero((T,) + m.plane.params)
    for a, g in zip(column, m.gens):
        if not a.is_zero():
            out = out + a.subs({"x": X, "y": Y}) * g
    return out.drop_vars(XY) if not out.is_zero() else out


def syzygy_search(
    m: ModuleData,
    F: ImplicitEquation,
    D: int,
    N: int = None,
    param_degree: int = None,
) -> List[Syzygy]:
    """A basis of the syzygies of the generators with entries of degree 1 to `D`.

    The unknowns are the coefficients of `x^a y^c s^k` in each component, with
    `1 <= a + c <= D` and parameter degree at most `param_degree`. The equations are the
    coefficients of `t^j s^l` of `sum a_i(x(t), y(t)) g_i(t)`, all of them unless `N`
    restricts them to `j < N`. Each basis vector is checked by substitution and kept
    only if the relation holds exactly.

    Parameters:
        m: Module data with polynomial generators.
        F: The equation of the plane branch; its parameters join those of the plane.
        D: Degree cap in x and y.
        N: Optional truncation of the equations in t.
        param_degree: Degree cap in the parameters, ignored without parameters.

    Returns:
        The syzygies as tuples of `b` polynomials in x, y and the parameters, in the
        order of the free columns of the reduced system.

    """
    params = _module_params(m, F)
    P = (CONFIG.param_degree if param_degree is None else param_degree) if params else 0
    ctx = (T,) + params
    X = m.plane.x.with_vars(ctx)
    Y = m.plane.y.with_vars(ctx)
    gens = [g.with_vars(ctx) for g in m.gens]

    xpow: Dict[int, MPoly] = {0: MPoly.const(1, ctx)}
    ypow: Dict[int, MPoly] = {0: MPoly.const(1, ctx)}
    for k in range(1, D + 1):
        xpow[k] = xpow[k - 1] * X
        ypow[k] = ypow[k - 1] * Y

    monos = xy_monomials(D)
    pmonos = param_monomials(params, P)
    unknowns = [
        (i, ac, mu) for ac in monos for mu in pmonos for i in range(len(gens))
    ]

    equations: Dict[Tuple[int, ...], Dict[int, int]] = {}
    t_index = ctx.index(T)
    for col, (i, (a, c), mu) in enumerate(unknowns):
        value = xpow[a] * ypow[c] * gens[i]
        if any(mu):
            value = value * MPoly({(0,) + mu: 1}, ctx)
        for exp, coeff in value.terms.items():
            if N is not None and exp[t_index] >= N:
                continue
            equations.setdefault(exp, {})[col] = coeff

    kernel = q_nullspace(list(equations.values()), ncols=len(unknowns))
    out_ctx = XY + params
    syzygies = []
    for vec in kernel:
        comps = [MPoly.zero(out_ctx) for _ in gens]
        for coeff, (i, (a, c), mu) in zip(vec, unknowns):
            if coeff:
                comps[i] = comps[i] + MPoly({(a, c) + mu: coeff}, out_ctx)
        column = tuple(comps)
        if syzygy_residual(column, m).is_zero():
            syzygies.append(column)
        else:
            LOGGER.debug("Dropped a kernel vector that is not a syzygy: %s", column)
    LOGGER.debug(
        "Syzygies up to degree %d (parameter degree %d): %d unknowns, %d equations, %d found",
        D,
        P,
        len(unknowns),
        len(equations),
        len(syzygies),
    )
    return syzygies

"""Whether a module over `O_Y` is, up to a generator, a ring extension of `O_Y`."""
from fractions import Fraction
from typing import Dict

from curvefact.exactalg import MPoly, TSeries, series_inverse
from curvefact.exceptions import NotDivisible, TruncationTooSmall
from curvefact.models import AlgebraWitness, ModuleData, T
from curvefact.matfact.generators import module_echelon, plane_conductor
from curvefact.matfact.logger import LOGGER

__all__ = ("is_algebra", "algebra_trunc")


def algebra_trunc(m: ModuleData) -> int:
    """The least truncation deciding membership in the module: `max(2 c_Y, min ord g + c_Y)`."""
    c_y = plane_conductor(m.plane)
    return max(2 * c_y, min(m.orders) + c_y)


def _quotient(p: MPoly, e: MPoly, trunc: int) -> Dict[int, Fraction]:
    """The Laurent expansion of `p / e`, exponents below `trunc`."""
    k = min(e.t_terms(T))
    unit = TSeries.from_terms(
        {j - k: c for j, c in e.t_terms(T).items() if j - k < trunc + k}, trunc + k
    )
    inverse = series_inverse(unit)
    num = p.t_terms(T)
    out: Dict[int, Fraction] = {}
    for j, c in num.items():
        for i, u in inverse.terms().items():
            exp = j + i - k
            if exp < trunc:
                out[exp] = out.get(exp, Fraction(0)) + c * u
    return {j: c for j, c in out.items() if c}


def _show(p: MPoly, e: MPoly) -> str:
    if e == 1:
        return str(p)
    try:
        return str(p.divexact(e))
    except NotDivisible:
        return f"({p})/({e})"


def is_algebra(m: ModuleData, e_index: int = 0, trunc: int = None) -> AlgebraWitness:
    """Decide whether `e^-1 M` is closed under multiplication, with `e` the generator
    `m.gens[e_index]` as identity.

    For all pairs `i <= j` the product `(g_i / e)(g_j / e) e = g_i g_j / e` is tested for
    membership in `M` modulo `t^N`. From `N >= min ord g + c_Y` on, `t^N Q[[t]]` lies in
    `M`, so membership modulo `t^N` is membership.

    Parameters:
        m: Module data; families are tested at s = 0.
        e_index: Index of the generator used as identity element.
        trunc: Working order N, by default `max(2 c_Y, min ord g + c_Y)`.

    Raises:
        TruncationTooSmall: If `trunc` is below `min ord g + c_Y`.

    Returns:
        The verdict and, when it is negative, the first failing pair.

    """
    c_y = plane_conductor(m.plane)
    needed = min(m.orders) + c_y
    if trunc is None:
        trunc = max(2 * c_y, needed)
    elif trunc < needed:
        raise TruncationTooSmall(
            f"Membership in the module is undecidable modulo t^{trunc}; at least t^{needed} is needed."
        )
    ech = module_echelon(m, trunc)
    e = m.gens[e_index]
    label = str(e)

    for i, gi in enumerate(m.gens):
        for j in range(i, len(m.gens)):
            gj = m.gens[j]
            product = _quotient(gi * gj, e, trunc)
            if not product or (min(product) >= 0 and ech.contains(product)):
                continue
            LOGGER.debug("g_%d g_%d / e leaves the module modulo t^%d", i + 1, j + 1, trunc)
            return AlgebraWitness(
                is_algebra=False,
                identity=label,
                trunc=trunc,
                pair=(i, j),
                factors=(_show(gi, e), _show(gj, e)),
                product=_show(gi * gj, e),
            )
    return AlgebraWitness(is_algebra=True, identity=label, trunc=trunc)

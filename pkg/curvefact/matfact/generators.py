"""Generators of `O_X` as a module over the ring `O_Y` of a plane projection.

Everything happens inside `Q[[t]]` modulo a power of `t`: the rings are spanned by
power products of their coordinates, modules by products with the generators.

"""
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from curvefact.branch import parameter_free, power_products, semigroup, sparse_mul, standardize
from curvefact.exactalg import Echelon, MPoly
from curvefact.exceptions import IncompleteTruncation
from curvefact.models import ModuleData, PlaneBranch, StandardBranch, T
from curvefact.matfact.logger import LOGGER

__all__ = (
    "quotient_generators",
    "module_echelon",
    "value_set",
    "plane_conductor",
    "ring_products",
)

Sparse = Dict[int, Fraction]


def _fibre(pb: PlaneBranch) -> PlaneBranch:
    return pb.at_origin() if pb.params else pb


def ring_products(coords: Sequence[Sparse], trunc: int):
    """Power products of series of positive order, below `trunc`, by increasing order."""
    factors = [c for c in coords if c]
    orders = [min(c) for c in factors]
    return power_products(factors, orders, trunc)


def plane_conductor(pb: PlaneBranch) -> int:
    """The conductor of the semigroup of a plane branch (its fibre at s = 0)."""
    return semigroup(standardize(_fibre(pb).as_branch())).conductor_c


def module_echelon(m: ModuleData, trunc: int) -> Echelon:
    """An echelon form of the `O_Y`-span of the generators modulo `t^trunc`."""
    plane = _fibre(m.plane)
    coords = (plane.x.t_terms(T), plane.y.t_terms(T))
    gens = [g.t_terms(T) for g in m.gens]
    ech = Echelon()
    for _, _, p in ring_products(coords, trunc):
        for g in gens:
            ech.add(sparse_mul(p, g, trunc))
    return ech


def value_set(m: ModuleData, trunc: int = None) -> Tuple[int, ...]:
    """The orders of the elements of the `O_Y`-span of the generators.

    All orders from `min ord g + c_Y` on are values, so the default truncation
    `min ord g + c_Y + 1` lists everything that distinguishes the module.

    """
    if trunc is None:
        trunc = min(m.orders) + plane_conductor(m.plane) + 1
    return tuple(module_echelon(m, trunc).pivots)


def _product(coords: Sequence[MPoly], alpha: Sequence[int]) -> MPoly:
    out = MPoly.const(1, (T,))
    for c, k in zip(coords, alpha):
        if k:
            out = out * c ** k
    return out


def quotient_generators(b: StandardBranch, pb: PlaneBranch, trunc: int = None) -> ModuleData:
    """Representatives of a basis of `O_X / (x, y) O_X`, which generate `O_X` over `O_Y`.

    Products `x p` and `y p` with `p` running over power products of the coordinates of
    `b` span `(x, y) O_X` modulo `t^N`. Power products are then head-reduced against
    this span by increasing order; each one leaving a new pivot contributes the reduced
    element of `O_X` as a generator, scaled to leading coefficient 1. The first
    generator is 1.

    Parameters:
        b: The space branch. Families are taken at s = 0.
        pb: Its projection `(x(t), y(t))`.
        trunc: Working order N. It must be at least `m + c_X`, where `m` is the least
            order of x and y, since `t^(m + c_X) Q[[t]]` lies in `(x, y) O_X`.

    Raises:
        IncompleteTruncation: If `trunc` is below `m + c_X`.

    """
    b = parameter_free(b)
    plane = _fibre(pb)
    x, y = plane.x.t_terms(T), plane.y.t_terms(T)
    low = min(min(z) for z in (x, y) if z)
    needed = low + semigroup(b).conductor_c
    if trunc is None:
        trunc = needed
    elif trunc < needed:
        raise IncompleteTruncation(
            f"(x, y) O_X is only known to contain t^{needed} Q[[t]]; trunc = {trunc} is too small"
        )
    if not b.exact and b.trunc < trunc:
        b = b.at_trunc(trunc)

    coords = [c.with_vars((T,)) for c in b.coords]
    series = [c.t_terms(T) for c in coords]
    products = list(ring_products(series, trunc))

    ech = Echelon(track=True)
    for order, alpha, p in products:
        if order + low >= trunc:
            break
        payload = _product(coords, alpha)
        for z, terms in ((plane.x, x), (plane.y, y)):
            ech.add(sparse_mul(p, terms, trunc), z.with_vars((T,)) * payload)
    span = len(ech)

    found: List[Tuple[int, MPoly]] = []
    for _, alpha, p in products:
        pivot = ech.add(p, _product(coords, alpha))
        if pivot is not None:
            g = ech.payload(pivot)
            if not b.exact:
                g = g.truncate_degree((T,), trunc)
            found.append((pivot, g))
    found.sort(key=lambda item: item[0])
    LOGGER.debug(
        "%s: (x, y) O_X has codimension %d modulo t^%d (span %d), generator orders %s",
        b.source.name,
        len(found),
        trunc,
        span,
        [k for k, _ in found],
    )
    return ModuleData(plane=pb, gens=tuple(g for _, g in found), trunc=trunc)

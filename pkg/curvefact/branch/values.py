"""The semigroup of values of a branch.

The values below a truncation `N` are the pivot orders of the span of all power
products `x_1^a_1 ... x_n^a_n` of t-order below `N`. Products are inserted into an
[`Echelon`][curvefact.exactalg.linalg.Echelon] by increasing order; once every
product of order below `m` is in, the values below `m` are final. A run of `e`
consecutive final values then certifies every larger integer as a value, because
`x_1 = t^e`.

"""
import heapq
import warnings
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from curvefact.config import CONFIG
from curvefact.exactalg import Echelon
from curvefact.exceptions import InsufficientTruncation
from curvefact.models import SemigroupData, StandardBranch, T, t_exponents
from curvefact.warnings import IncompleteSemigroup, ParameterSpecialized
from curvefact.branch.logger import LOGGER
from curvefact.branch.standard import standardize

__all__ = (
    "semigroup",
    "minimal_generators",
    "power_products",
    "sparse_mul",
    "parameter_free",
)

Sparse = Dict[int, int]


def sparse_mul(a: Dict, b: Dict, trunc: int) -> Dict:
    """Product of two sparse series `{exponent: coefficient}`, dropping exponents `>= trunc`."""
    out = {}
    for i, ai in a.items():
        for j, bj in b.items():
            k = i + j
            if k < trunc:
                value = out.get(k, 0) + ai * bj
                if value:
                    out[k] = value
                else:
                    out.pop(k, None)
    return out


def power_products(
    factors: Sequence[Dict], orders: Sequence[int], trunc: int
) -> Iterator[Tuple[int, Tuple[int, ...], Dict]]:
    """Yield `(order, exponents, product)` for every power product of `factors`
    of order below `trunc`, by increasing order.

    Each exponent vector is produced once: a vector is only extended in factors at or
    after its last nonzero position.

    """
    n = len(factors)
    heap = [(0, (0,) * n, 0)]
    products = {(0,) * n: {0: 1}}
    while heap:
        order, alpha, last = heapq.heappop(heap)
        product = products.pop(alpha)
        yield order, alpha, product
        for i in range(last, n):
            new_order = order + orders[i]
            if new_order >= trunc:
                continue
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1 :]
            products[beta] = sparse_mul(product, factors[i], trunc)
            heapq.heappush(heap, (new_order, beta, i))


def parameter_free(b: StandardBranch) -> StandardBranch:
    """The fibre at s = 0 of a family, with a warning; parameter-free input is returned unchanged."""
    if not b.is_family:
        return b
    warnings.warn(
        ParameterSpecialized(
            f"{b.source.name} depends on {', '.join(b.params)}; invariants are computed at s = 0."
        )
    )
    return standardize(b.source.at_origin(), trunc=b.trunc)


def _run_start(values: Sequence[bool], e: int, upto: int) -> Optional[int]:
    run = 0
    for k in range(upto):
        run = run + 1 if values[k] else 0
        if run == e:
            return k - e + 1
    return None


def _semigroup_at(b: StandardBranch, bound: int) -> Tuple[List[int], Optional[int]]:
    """Values below `bound` and the start of the first certified run of `e` values, if any."""
    coords = b.series(trunc=min(bound, b.trunc) if not b.exact else bound)
    factors, orders = [], []
    for s in coords:
        terms = s.terms()
        if terms:
            factors.append(terms)
            orders.append(min(terms))
    ech = Echelon()
    is_value = [False] * bound
    final = 0
    for order, _, product in power_products(factors, orders, bound):
        if order > final:
            final = order
            start = _run_start(is_value, b.e, final)
            if start is not None:
                LOGGER.debug(
                    "%s: values certified from %d on after products of order < %d",
                    b.source.name,
                    start,
                    final,
                )
                return [k for k in range(bound) if k >= start or is_value[k]], start
        pivot = ech.add(product)
        if pivot is not None and pivot < bound:
            is_value[pivot] = True
    start = _run_start(is_value, b.e, bound)
    return [k for k in range(bound) if is_value[k] or (start is not None and k >= start)], start


def semigroup(
    b: StandardBranch,
    bound: int = None,
    trunc_factor: int = None,
    trunc_cap: int = None,
) -> SemigroupData:
    """The semigroup of values, with gaps, delta, conductor and the Gorenstein test.

    Parameters:
        b: A standardized branch. Families are specialized at s = 0.
        bound: An explicit truncation N. Without a certificate below N the data is
            returned with `complete = False` and an `IncompleteSemigroup` warning.
        trunc_factor: Factor of the default truncation `trunc_factor * a * b`.
        trunc_cap: Without an explicit bound, the truncation is doubled up to this cap.

    Raises:
        InsufficientTruncation: If no certificate is found below the cap.

    Returns:
        The semigroup data.

    """
    b = parameter_free(b)
    trunc_factor = CONFIG.trunc_factor if trunc_factor is None else trunc_factor
    trunc_cap = CONFIG.trunc_cap if trunc_cap is None else trunc_cap

    if bound is not None:
        if not b.exact and bound > b.trunc:
            b = b.at_trunc(bound)
        elements, start = _semigroup_at(b, bound)
        if start is None:
            warnings.warn(
                IncompleteSemigroup(
                    f"No run of {b.e} consecutive values below {bound} for {b.source.name}; "
                    "gaps and delta are only known below the bound."
                )
            )
        return _data(b.e, bound, elements, start)

    orders = sorted(t_exponents(c)[0] for c in b.coords if not c.is_zero())
    n = min(trunc_factor * orders[0] * (orders[1] if len(orders) > 1 else orders[0]), trunc_cap)
    n = max(n, b.e + 1)
    while True:
        if not b.exact and n > b.trunc:
            b = b.at_trunc(n)
        elements, start = _semigroup_at(b, n)
        if start is not None:
            return _data(b.e, n, elements, start)
        if n >= trunc_cap:
            raise InsufficientTruncation(
                f"No run of {b.e} consecutive values below the cap {trunc_cap} for {b.source.name}"
            )
        LOGGER.debug("%s: no certificate below %d, doubling", b.source.name, n)
        n = min(2 * n, trunc_cap)


def _data(e: int, bound: int, elements: List[int], start: Optional[int]) -> SemigroupData:
    complete = start is not None
    members = set(elements)
    limit = start if complete else bound
    gaps = tuple(k for k in range(limit) if k not in members)
    frobenius = gaps[-1] if gaps else -1
    conductor = frobenius + 1
    delta = len(gaps)
    data = dict(
        e=e,
        bound=bound,
        elements=tuple(elements),
        gaps=gaps,
        delta=delta,
        frobenius=frobenius,
        conductor_c=conductor,
        gorenstein=(conductor == 2 * delta) if complete else None,
        complete=complete,
    )
    if complete:
        data["minimal_generators"] = _minimal_generators(members, conductor, e)
    return SemigroupData(**data)


def _minimal_generators(members, conductor: int, e: int) -> Tuple[int, ...]:
    def contains(k):
        return k >= conductor or k in members

    gens = []
    for k in range(1, conductor + e):
        if contains(k) and not any(contains(j) and contains(k - j) for j in range(1, k)):
            gens.append(k)
    return tuple(gens)


def minimal_generators(data: SemigroupData) -> Tuple[int, ...]:
    """The minimal generating set of a complete semigroup.

    Raises:
        InsufficientTruncation: If the data is incomplete.

    """
    if not data.complete:
        raise InsufficientTruncation(
            "Minimal generators need complete semigroup data; retry with a larger bound."
        )
    return _minimal_generators(set(data.elements), data.conductor_c, data.e)

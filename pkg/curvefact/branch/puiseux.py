"""Equisingularity data of plane branches: characteristic exponents, semigroup
generators, multiplicity sequence, delta and the Milnor number."""
import warnings
from math import gcd
from typing import List, Sequence

from curvefact.exceptions import DimensionMismatch, TruncationTooSmall
from curvefact.models import DeltaConsistency, PuiseuxData, StandardBranch, t_exponents
from curvefact.warnings import ExponentConventionWarning
from curvefact.branch.logger import LOGGER
from curvefact.branch.values import parameter_free, semigroup

__all__ = (
    "puiseux_characteristic",
    "multiplicity_sequence",
    "conductor_from_characteristic",
    "delta_consistency",
)


def multiplicity_sequence(e: int, char_exponents: Sequence[int]) -> List[int]:
    """Multiplicities of the successive blow-ups, down to and including the first 1.

    Each characteristic pair contributes the quotients of the Euclidean algorithm on
    `(beta_i - beta_{i-1}, d_{i-1})`: the divisor is repeated quotient times.

    """
    seq = []
    prev, d = 0, e
    for beta in char_exponents:
        a, b = beta - prev, d
        while b:
            q, r = divmod(a, b)
            seq.extend([b] * q)
            a, b = b, r
        d = a
        prev = beta
    if 1 in seq:
        seq = seq[: seq.index(1) + 1]
    else:
        seq.append(1)
    return seq


def conductor_from_characteristic(data: PuiseuxData) -> int:
    """The conductor `sum (n_i - 1) bar_beta_i - bar_beta_0 + 1` with `n_i = d_{i-1} / d_i`."""
    gens, d = data.sg_generators, data.gcd_seq
    c = sum((d[i - 1] // d[i] - 1) * gens[i] for i in range(1, len(gens))) - gens[0] + 1
    return max(c, 0)


def _in_semigroup(n: int, gens: Sequence[int]) -> bool:
    reachable = [True] + [False] * n
    for k in range(1, n + 1):
        reachable[k] = any(g <= k and reachable[k - g] for g in gens)
    return reachable[n]


def puiseux_characteristic(b: StandardBranch) -> PuiseuxData:
    """Characteristic exponents and derived data of a standardized plane branch.

    Raises:
        DimensionMismatch: If the branch is not plane.
        TruncationTooSmall: If the stored exponents do not reach gcd 1.

    """
    if b.n != 2:
        raise DimensionMismatch(f"Puiseux data needs a plane branch, got {b.n} coordinates")
    b = parameter_free(b)
    e = b.e
    y = b.coords[1]
    support = [j for j in t_exponents(y) if b.exact or j < b.trunc]

    char, seq = [], [e]
    d = e
    while d > 1:
        beta = next((j for j in support if j % d), None)
        if beta is None:
            raise TruncationTooSmall(
                f"The gcd sequence of {b.source.name} is stuck at {d} below t^{b.trunc}; "
                "retry with a larger truncation."
            )
        char.append(beta)
        d = gcd(d, beta)
        seq.append(d)

    gens = [e]
    if char:
        gens.append(char[0])
        for i in range(1, len(char)):
            n_i = seq[i - 1] // seq[i]
            gens.append(n_i * gens[i] + char[i] - char[i - 1])

    mult = multiplicity_sequence(e, char)
    delta = sum(m * (m - 1) // 2 for m in mult)

    if b.exact:
        # t^j with j + e in the semigroup is removable by a coordinate change
        extra = sorted(j for j in support if j % e and j not in char and not _in_semigroup(j + e, gens))
        if extra:
            warnings.warn(
                ExponentConventionWarning(
                    f"{b.source.name}: the exponents {extra} are not divisible by {e} and "
                    f"cannot be removed by a change of coordinates, the characteristic "
                    f"exponents are {char}."
                )
            )

    data = PuiseuxData(
        e=e,
        char_exponents=tuple(char),
        gcd_seq=tuple(seq),
        sg_generators=tuple(gens),
        mult_sequence=tuple(mult),
        delta=delta,
        mu=2 * delta,
        conductor_c=0,
    )
    data = data.copy(update={"conductor_c": conductor_from_characteristic(data)})
    LOGGER.debug("%s: characteristic (%d; %s)", b.source.name, e, char)
    return data


def delta_consistency(b: StandardBranch) -> DeltaConsistency:
    """Compare delta and the conductor from the gaps of the semigroup with the values
    obtained from the multiplicity sequence and the characteristic generators."""
    sg = semigroup(b)
    pd = puiseux_characteristic(b)
    formula = conductor_from_characteristic(pd)
    return DeltaConsistency(
        delta_gaps=sg.delta,
        delta_mult=pd.delta,
        conductor_gaps=sg.conductor_c,
        conductor_formula=formula,
        consistent=sg.delta == pd.delta and sg.conductor_c == formula,
    )

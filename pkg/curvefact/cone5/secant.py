"""The cone of limits of secants of a standardized branch.

For a primitive e-th root of unity `eps` of residue `k`, the secant through the points
of parameters `t` and `eps t` has limit direction `(0, b_{j,2}, ..., b_{j,n})` where `j`
is the least exponent above `e` with `(eps^j - 1) b_{j,i} != 0` for some `i`. The factor
`eps^j - 1` vanishes exactly when `e` divides `k j`, so no root of unity is ever built.

"""
import warnings
from fractions import Fraction
from typing import Dict, List, Tuple

from curvefact.branch import parameter_free
from curvefact.models import ConePlane, SecantCone, StandardBranch, T, t_exponents
from curvefact.warnings import TruncatedCone
from curvefact.cone5.logger import LOGGER

__all__ = ("secant_cone", "normalize_direction")


def normalize_direction(v: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    lead = next(c for c in v if c)
    return tuple(Fraction(c) / lead for c in v)


def _support(b: StandardBranch) -> Dict[int, Tuple[Fraction, ...]]:
    exps = set()
    for c in b.coords[1:]:
        exps.update(t_exponents(c))
    limit = None if b.exact else b.trunc
    out = {}
    for j in sorted(exps):
        if j <= b.e or (limit is not None and j >= limit):
            continue
        vec = tuple(c.coefficient({T: j}) for c in b.coords[1:])
        if any(vec):
            out[j] = vec
    return out


def secant_cone(b: StandardBranch) -> SecantCone:
    """The secant cone as a union of planes spanned by the tangent `(1, 0, ..., 0)` and
    secondary directions.

    Residues without a jump exponent below the truncation are listed separately and
    trigger a `TruncatedCone` warning.

    """
    b = parameter_free(b)
    e = b.e
    support = _support(b)
    planes: Dict[Tuple[Fraction, ...], List[Tuple[int, int]]] = {}
    truncated = []
    for k in range(1, e):
        jump = next((j for j in support if (k * j) % e), None)
        if jump is None:
            truncated.append(k)
            continue
        direction = normalize_direction((Fraction(0),) + support[jump])
        planes.setdefault(direction, []).append((k, jump))

    if truncated:
        warnings.warn(
            TruncatedCone(
                f"Residues {truncated} of {b.source.name} have no jump exponent below t^{b.trunc}."
            )
        )
    LOGGER.debug("%s: %d secant plane(s)", b.source.name, len(planes))
    return SecantCone(
        e=e,
        n=b.n,
        trunc=b.trunc,
        planes=tuple(
            ConePlane(
                direction=direction,
                residues=tuple(k for k, _ in tags),
                jumps=tuple(j for _, j in tags),
            )
            for direction, tags in planes.items()
        ),
        truncated_residues=tuple(truncated),
    )

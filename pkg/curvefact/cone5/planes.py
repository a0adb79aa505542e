"""Transversality of projection planes and the search for generic ones."""
import itertools
import warnings
from typing import Iterator, List, Optional, Sequence

from curvefact.config import CONFIG
from curvefact.exceptions import DimensionMismatch, NonTransversal
from curvefact.models import ProjectionPlane, SecantCone
from curvefact.warnings import TruncatedCone
from curvefact.cone5.logger import LOGGER

__all__ = ("is_transversal", "iter_generic_planes", "pick_generic_plane", "value_order")


def is_transversal(c: SecantCone, L: ProjectionPlane) -> bool:
    """Whether the kernel of `(L1, L2)` meets the secant cone only at the origin.

    For every plane spanned by the tangent `v` and a direction `w` the determinant
    `L1(v) L2(w) - L2(v) L1(w)` must not vanish. Parametric planes are evaluated at
    s = 0.

    Raises:
        DimensionMismatch: If `L` and the cone live in different dimensions.

    """
    if L.n != c.n:
        raise DimensionMismatch(
            f"The projection plane has {L.n} coordinates per form, the branch lives in dimension {c.n}"
        )
    z = L.at_origin()
    l1, l2 = z[: c.n], z[c.n :]
    if not l1[0] and not l2[0]:
        return False
    for plane in c.planes:
        w = plane.direction
        det = l1[0] * sum(a * b for a, b in zip(l2, w)) - l2[0] * sum(
            a * b for a, b in zip(l1, w)
        )
        if not det:
            return False
    return True


def value_order(norm: int) -> List[int]:
    """`0, 1, -1, 2, -2, ..., norm, -norm`."""
    out = [0]
    for k in range(1, norm + 1):
        out.extend([k, -k])
    return out


def _tails(length: int, max_norm: int) -> Iterator[Sequence[int]]:
    for norm in range(1, max_norm + 1):
        for tail in itertools.product(value_order(norm), repeat=length):
            if max(abs(a) for a in tail) == norm:
                yield tail


def iter_generic_planes(c: SecantCone, max_norm: int = None) -> Iterator[ProjectionPlane]:
    """Transversal planes of the frozen enumeration, lazily.

    `L1 = x_1` is fixed and `L2 = a_2 x_2 + ... + a_n x_n` runs over integer vectors by
    max-norm, then lexicographically in the value order `0, 1, -1, 2, -2, ...`.

    """
    max_norm = CONFIG.plane_search_norm if max_norm is None else max_norm
    n = c.n
    l1 = (1,) + (0,) * (n - 1)
    for tail in _tails(n - 1, max_norm):
        plane = ProjectionPlane.from_values(l1 + (0,) + tuple(tail))
        if is_transversal(c, plane):
            yield plane


def pick_generic_plane(c: SecantCone, n: Optional[int] = None, max_norm: int = None) -> ProjectionPlane:
    """The first transversal plane of the frozen enumeration.

    Raises:
        DimensionMismatch: If `n` is given and differs from the dimension of the cone.
        NonTransversal: If no plane up to `max_norm` is transversal.

    """
    if n is not None and n != c.n:
        raise DimensionMismatch(f"The cone lives in dimension {c.n}, not {n}")
    if c.truncated:
        warnings.warn(
            TruncatedCone(
                f"Residues {list(c.truncated_residues)} have no jump below t^{c.trunc}; "
                "the chosen plane may fail to be generic."
            )
        )
    plane = next(iter_generic_planes(c, max_norm), None)
    if plane is None:
        raise NonTransversal(
            f"No transversal plane with coefficients of max-norm <= {max_norm or CONFIG.plane_search_norm}"
        )
    LOGGER.debug("Generic plane: %s", plane)
    return plane

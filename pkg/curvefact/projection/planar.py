"""Plane projections of branches and the invariants of generic projections."""
import warnings
from typing import Tuple

from curvefact.branch import parameter_free, puiseux_characteristic, semigroup, standardize
from curvefact.cone5 import is_transversal, iter_generic_planes, secant_cone
from curvefact.exactalg import MPoly, merge_vars
from curvefact.exceptions import (
    DimensionMismatch,
    NonReducedImage,
    NonTransversal,
    VerificationFailed,
)
from curvefact.models import (
    DeltaBounds,
    PlaneBranch,
    ProjectionPlane,
    PuiseuxData,
    StandardBranch,
    T,
)
from curvefact.warnings import TransversalityOverridden
from curvefact.projection.logger import LOGGER

__all__ = (
    "project",
    "generic_projection",
    "plane_invariants",
    "mu_bar",
    "delta_bounds_check",
)


def _linear_form(coeffs: Tuple[MPoly, ...], coords: Tuple[MPoly, ...], ctx) -> MPoly:
    acc = MPoly.zero(ctx)
    for z, f in zip(coeffs, coords):
        if not z.is_zero():
            acc = acc + z.with_vars(ctx) * f.with_vars(ctx)
    return acc


def project(b: StandardBranch, L: ProjectionPlane, check: bool = True) -> PlaneBranch:
    """The image `(L1(f), L2(f))` of a branch under a pair of linear forms.

    Parameters of the branch and of the plane are both carried through, which gives a
    projection in family.

    Parameters:
        b: A standardized branch.
        L: The projection plane.
        check: Raise on a non-transversal plane. When disabled such a plane
            emits a `TransversalityOverridden` warning instead.

    Raises:
        DimensionMismatch: If `L` is not made of forms in `b.n` variables.
        NonTransversal: If `L` is not transversal to the secant cone.
        NonReducedImage: If the image parametrization is not injective.

    """
    if L.n != b.n:
        raise DimensionMismatch(f"{b.source.name} lives in dimension {b.n}, the plane in {L.n}")
    if not is_transversal(secant_cone(b), L):
        if check:
            raise NonTransversal(f"The plane {L} is not transversal to the secant cone of {b.source.name}")
        warnings.warn(
            TransversalityOverridden(f"Projecting {b.source.name} along the non-transversal plane {L}.")
        )

    params = merge_vars(b.params, L.params)
    ctx = (T,) + params
    pb = PlaneBranch(
        name=f"{b.source.name} along ({L})",
        x=_linear_form(L.L1, b.coords, ctx),
        y=_linear_form(L.L2, b.coords, ctx),
        params=params,
        trunc=None if b.exact else b.trunc,
    )
    if not pb.is_reduced:
        raise NonReducedImage(
            f"The image {pb.x}, {pb.y} has support gcd {pb.support_gcd}: the projection is not injective"
        )
    return pb


def generic_projection(b: StandardBranch) -> Tuple[ProjectionPlane, PlaneBranch]:
    """The first plane of the frozen enumeration and the projection along it."""
    b = parameter_free(b)
    plane = next(iter_generic_planes(secant_cone(b)), None)
    if plane is None:
        raise NonTransversal(f"No transversal plane found for {b.source.name}")
    return plane, project(b, plane)


def plane_invariants(pb: PlaneBranch) -> PuiseuxData:
    """Puiseux data of a plane branch, through its standard form."""
    return puiseux_characteristic(standardize(pb.as_branch()))


def mu_bar(b: StandardBranch) -> int:
    """The Milnor number of a generic plane projection.

    The projections along the first two transversal planes of the enumeration must
    have the same characteristic exponents.

    Raises:
        VerificationFailed: If the two projections are not equisingular.

    """
    b = parameter_free(b)
    planes = iter_generic_planes(secant_cone(b))
    first = next(planes, None)
    if first is None:
        raise NonTransversal(f"No transversal plane found for {b.source.name}")
    data = plane_invariants(project(b, first))
    second = next(planes, None)
    if second is not None:
        other = plane_invariants(project(b, second))
        if other.char_exponents != data.char_exponents or other.e != data.e:
            raise VerificationFailed(
                f"Projections of {b.source.name} along {first} and {second} have "
                f"characteristics ({data.e}; {data.char_exponents}) and ({other.e}; {other.char_exponents})"
            )
    LOGGER.debug("%s: mu_bar = %d", b.source.name, data.mu)
    return data.mu


def delta_bounds_check(b: StandardBranch) -> DeltaBounds:
    """Evaluate `delta_X <= delta_Y <= (e - 1) delta_X - (e - 1)(e - 2)/2` for the
    generic projection `Y` of `X`."""
    b = parameter_free(b)
    delta_x = semigroup(b).delta
    _, pb = generic_projection(b)
    delta_y = plane_invariants(pb).delta
    e = b.e
    upper = (e - 1) * delta_x - (e - 1) * (e - 2) // 2
    return DeltaBounds(
        e=e,
        delta_x=delta_x,
        delta_y=delta_y,
        upper=upper,
        lower_ok=delta_x <= delta_y,
        upper_ok=delta_y <= upper,
    )

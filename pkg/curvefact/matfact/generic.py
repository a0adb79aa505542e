"""Recognizing generic plane projections from the curve data alone."""
from curvefact.branch import parameter_free, semigroup
from curvefact.exactalg import Echelon
from curvefact.exceptions import NonReducedImage
from curvefact.models import GenericProjectionWitness, PlaneBranch, StandardBranch, T
from curvefact.projection import mu_bar, plane_invariants
from curvefact.matfact.generators import ring_products
from curvefact.matfact.logger import LOGGER

__all__ = ("is_generic_projection_witness", "independent_mod_square")


def independent_mod_square(b: StandardBranch, pb: PlaneBranch) -> bool:
    """Whether `x(t)` and `y(t)` have independent classes in `m_X / m_X^2`.

    `m_X^2` is spanned by the power products of degree at least 2 of the coordinates;
    it contains `t^(2e + c_X) Q[[t]]`, which makes the test exact modulo that power.

    """
    b = parameter_free(b)
    trunc = 2 * b.e + semigroup(b).conductor_c
    if not b.exact and b.trunc < trunc:
        b = b.at_trunc(trunc)
    coords = [c.t_terms(T) for c in b.coords]
    square = Echelon()
    for _, alpha, p in ring_products(coords, trunc):
        if sum(alpha) >= 2:
            square.add(p)
    plane = pb.at_origin() if pb.params else pb
    for z in (plane.x, plane.y):
        terms = {j: c for j, c in z.t_terms(T).items() if j < trunc}
        if square.add(terms) is None:
            return False
    return True


def is_generic_projection_witness(b: StandardBranch, pb: PlaneBranch) -> GenericProjectionWitness:
    """Test the two conditions characterizing a generic projection `Y` of `X`:
    independence of x and y modulo `m_X^2`, and `mu(Y) = mu_bar(X)`.

    A non-injective image is reported as not generic, with reason `NonReducedImage`.

    """
    if not pb.is_reduced:
        LOGGER.debug("%s has support gcd %d", pb.name, pb.support_gcd)
        return GenericProjectionWitness(generic=False, reason=NonReducedImage.__name__)
    independent = independent_mod_square(b, pb)
    mu = plane_invariants(pb).mu
    expected = mu_bar(b)
    reasons = []
    if not independent:
        reasons.append("x and y are dependent modulo m_X^2")
    if mu != expected:
        reasons.append(f"mu = {mu} differs from mu_bar = {expected}")
    return GenericProjectionWitness(
        generic=not reasons,
        independent=independent,
        mu=mu,
        mu_bar=expected,
        reason="; ".join(reasons) or None,
    )

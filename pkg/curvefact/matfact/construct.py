"""Presentation matrices of module data and the matrix factorizations they induce."""
import itertools
from typing import Dict, List, Sequence, Tuple

from curvefact.config import CONFIG
from curvefact.exactalg import Echelon, MPoly, PolyMatrix, merge_vars, poly_adjugate, poly_det
from curvefact.exceptions import NoPresentationFound, VerificationFailed
from curvefact.models import (
    ImplicitEquation,
    MatrixFactorization,
    ModuleData,
    ProjectionPlane,
    StandardBranch,
)
from curvefact.projection import implicitize, project
from curvefact.matfact.generators import quotient_generators
from curvefact.matfact.logger import LOGGER
from curvefact.matfact.syzygy import XY, param_monomials, syzygy_search, xy_monomials
from curvefact.matfact.verify import det_ratio, verify_mf

__all__ = ("presentation_matrix", "build_mf")

Syzygy = Tuple[MPoly, ...]


def _vector(column: Syzygy, ctx: Sequence[str]) -> Dict[Tuple, int]:
    out = {}
    for i, a in enumerate(column):
        for exp, c in a.with_vars(ctx).terms.items():
            out[(i,) + exp] = c
    return out


def _multiples(column: Syzygy, ctx: Sequence[str], D: int, P: int):
    """Multiples of a syzygy by monomials in x, y and the parameters within the caps."""
    params = ctx[len(XY) :]
    degree = max(a.degree_in(XY) for a in column)
    pdegree = max(a.degree_in(params) for a in column) if params else 0
    for ac in xy_monomials(D - degree, low=0):
        for mu in param_monomials(params, P - pdegree):
            mono = MPoly({ac + mu: 1}, ctx)
            yield _vector(tuple(a * mono for a in column), ctx)


def presentation_matrix(
    m: ModuleData,
    F: ImplicitEquation,
    D: int = None,
    N: int = None,
    param_degree: int = None,
) -> PolyMatrix:
    """A square matrix of syzygies of the generators with determinant F.

    Syzygies are collected level by level over `(degree, parameter degree)`. At each
    level the kernel vectors lying in the span of monomial multiples of earlier
    columns are skipped; every other one becomes a candidate column. Sets of `b`
    candidates are tried in the order their last member was found, and the first with
    `det = c F`, `c` a nonzero rational, is returned with its last column divided by `c`.

    Parameters:
        m: Module data over the plane branch of F.
        F: The implicit equation.
        D: Degree cap, by default the total degree of F in x and y.
        N: Optional truncation of the syzygy equations.
        param_degree: Parameter degree cap of the syzygies, by default the larger of
            `CONFIG.param_degree` and the degree of F in the parameters.

    Raises:
        NoPresentationFound: If no set of candidates works within the caps.

    """
    D = F.F.degree_in(XY) if D is None else D
    params = merge_vars(m.plane.params, F.params)
    if not params:
        P = 0
    elif param_degree is None:
        P = max(CONFIG.param_degree, F.F.degree_in(params))
    else:
        P = param_degree
    ctx = XY + params
    b = m.b

    span = Echelon()
    candidates: List[Syzygy] = []
    for level in range(1, D + 1):
        for plevel in range(P + 1):
            for column in syzygy_search(m, F, level, N=N, param_degree=plevel):
                if span.contains(_vector(column, ctx)):
                    continue
                candidates.append(column)
                for vec in _multiples(column, ctx, D, P):
                    span.add(vec)
                for chosen in itertools.combinations(candidates[:-1], b - 1):
                    d = PolyMatrix.from_columns(list(chosen) + [column], ctx)
                    c = det_ratio(poly_det(d), F)
                    if c is not None:
                        LOGGER.debug(
                            "Presentation found at level (%d, %d) among %d candidates",
                            level,
                            plevel,
                            len(candidates),
                        )
                        return d.scale_column(b - 1, 1 / c)
            LOGGER.debug("Level (%d, %d): %d candidate column(s)", level, plevel, len(candidates))
    raise NoPresentationFound(
        f"No {b} syzygies with determinant c*F up to degree {D} and parameter degree {P}; "
        "retry with larger caps."
    )


def build_mf(
    b: StandardBranch,
    L: ProjectionPlane,
    D: int = None,
    N: int = None,
    param_degree: int = None,
) -> MatrixFactorization:
    """The matrix factorization of the projection of `b` along `L`.

    `F` is the implicit equation of the projection, `d` a presentation matrix of `O_X`
    over `O_Y` with `det(d) = F`, and `h` its adjugate.

    Raises:
        NonTransversal: If `L` is not transversal.
        NotPolynomialParametrization: If `b` is not given by polynomials.
        NoPresentationFound: If the caps are too small.
        VerificationFailed: If the result fails [`verify_mf`][curvefact.matfact.verify.verify_mf].

    """
    pb = project(b, L)
    F = implicitize(pb)
    m = quotient_generators(b, pb)
    d = presentation_matrix(m, F, D=D, N=N, param_degree=param_degree)
    mf = MatrixFactorization(F=F, d=d, h=poly_adjugate(d), gens=m)
    report = verify_mf(mf)
    if not report.passed:
        failed = [c for c in report.checks if not c.passed]
        raise VerificationFailed(
            f"The constructed pair fails {failed[0].name}: {failed[0].witness}"
        )
    return mf

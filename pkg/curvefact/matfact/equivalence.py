"""Equivalence of matrix factorizations under `d -> phi d psi^-1`.

The search is a semi-decision procedure: invariants of the cokernel may prove two
factorizations inequivalent, and a bounded search for witnesses may prove them
equivalent. Otherwise the verdict is inconclusive.

"""
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from curvefact.config import CONFIG
from curvefact.exactalg import Echelon, MPoly, PolyMatrix, merge_vars, poly_det, q_nullspace
from curvefact.exceptions import SameFRequired
from curvefact.models import EquivalenceVerdict, MatrixFactorization, Verdict
from curvefact.matfact.generators import value_set
from curvefact.matfact.logger import LOGGER
from curvefact.matfact.syzygy import XY, xy_monomials

__all__ = ("mf_equivalent", "coker_dimensions", "screen_invariants")

WEIGHTS = (
    ("1", lambda k: 1),
    ("k+1", lambda k: k + 1),
    ("2^k", lambda k: 2 ** k),
    ("3^k", lambda k: 3 ** k),
)
"""Frozen weight patterns for combinations of kernel vectors."""


def _xy_terms(p: MPoly) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
    """Terms of `p` at s = 0 as `((deg_x, deg_y), coefficient)`."""
    ix = p.vars.index("x") if "x" in p.vars else None
    iy = p.vars.index("y") if "y" in p.vars else None
    others = [i for i, v in enumerate(p.vars) if v not in XY]
    for exp, c in p.terms.items():
        if any(exp[i] for i in others):
            continue
        yield (exp[ix] if ix is not None else 0, exp[iy] if iy is not None else 0), c


def coker_dimensions(d: PolyMatrix, depth: int = None) -> Tuple[int, ...]:
    """`dim coker(d) / (x, y)^k coker(d)` for `k = 1, ..., depth`, at s = 0."""
    depth = CONFIG.screen_depth if depth is None else depth
    dims = []
    for k in range(1, depth + 1):
        monos = xy_monomials(k - 1, low=0)
        image = Echelon()
        for j in range(d.cols):
            for a, c in monos:
                vec = {}
                for i in range(d.rows):
                    for (ex, ey), coeff in _xy_terms(d[i, j]):
                        if a + ex + c + ey < k:
                            vec[(i, a + ex, c + ey)] = coeff
                image.add(vec)
        dims.append(d.rows * len(monos) - len(image))
    return tuple(dims)


def _normalized_values(mf: MatrixFactorization) -> Tuple[int, ...]:
    values = value_set(mf.gens)
    return tuple(v - values[0] for v in values)


def screen_invariants(mf1: MatrixFactorization, mf2: MatrixFactorization, depth: int = None) -> Optional[str]:
    """A certificate that the cokernels differ, or `None` when the invariants agree."""
    dims1, dims2 = coker_dimensions(mf1.d, depth), coker_dimensions(mf2.d, depth)
    for k, (a, b) in enumerate(zip(dims1, dims2), start=1):
        if a != b:
            return f"dim coker/(x,y)^{k} coker: {a} != {b}"
    if mf1.gens is not None and mf2.gens is not None:
        v1, v2 = _normalized_values(mf1), _normalized_values(mf2)
        if v1 != v2:
            return f"value sets of the modules, up to translation: {list(v1)} != {list(v2)}"
    return None


def _unknowns(b: int, monos: Sequence[Tuple[int, int]]) -> List[Tuple[str, int, int, Tuple[int, int]]]:
    return [
        (name, i, j, mono)
        for name in ("phi", "psi")
        for i in range(b)
        for j in range(b)
        for mono in monos
    ]


def _shift(p: MPoly, mono: Tuple[int, int], ctx: Sequence[str]) -> Dict[Tuple[int, ...], Fraction]:
    ix, iy = ctx.index("x"), ctx.index("y")
    out = {}
    for exp, c in p.with_vars(ctx).terms.items():
        new = list(exp)
        new[ix] += mono[0]
        new[iy] += mono[1]
        out[tuple(new)] = c
    return out


def _assemble(vec, unknowns, b: int, ctx) -> Tuple[PolyMatrix, PolyMatrix]:
    entries = {
        "phi": [[MPoly.zero(ctx) for _ in range(b)] for _ in range(b)],
        "psi": [[MPoly.zero(ctx) for _ in range(b)] for _ in range(b)],
    }
    for coeff, (name, i, j, (a, c)) in zip(vec, unknowns):
        if coeff:
            entries[name][i][j] = entries[name][i][j] + MPoly.monomial({"x": a, "y": c}, ctx, coeff)
    return PolyMatrix(entries["phi"], ctx), PolyMatrix(entries["psi"], ctx)


def _invertible(m: PolyMatrix) -> bool:
    return not poly_det(PolyMatrix(m.constant_part())).is_zero()


def _patterns(kernel: List[List[Fraction]]) -> Iterator[Tuple[str, List[Fraction]]]:
    for k, v in enumerate(kernel):
        yield f"basis vector {k}", v
    if len(kernel) > 1:
        for name, weight in WEIGHTS:
            yield f"weights {name}", [
                sum(weight(k) * v[col] for k, v in enumerate(kernel))
                for col in range(len(kernel[0]))
            ]


def _search(d1: PolyMatrix, d2: PolyMatrix, degree: int) -> Optional[Tuple[PolyMatrix, PolyMatrix]]:
    """Witnesses of degree at most `degree` with `phi d1 = d2 psi`, if the frozen scan finds any."""
    ctx = merge_vars(XY, d1.vars, d2.vars)
    b = d1.rows
    monos = xy_monomials(degree, low=0)
    unknowns = _unknowns(b, monos)
    equations: Dict[Tuple, Dict[int, Fraction]] = {}
    for col, (name, i, j, mono) in enumerate(unknowns):
        if name == "phi":
            # phi[i][j] contributes phi_ij d1[j][l] to entry (i, l)
            for l in range(b):
                for exp, c in _shift(d1[j, l], mono, ctx).items():
                    row = equations.setdefault((i, l) + exp, {})
                    row[col] = row.get(col, 0) + c
        else:
            # psi[i][j] contributes -d2[l][i] psi_ij to entry (l, j)
            for l in range(b):
                for exp, c in _shift(d2[l, i], mono, ctx).items():
                    row = equations.setdefault((l, j) + exp, {})
                    row[col] = row.get(col, 0) - c
    kernel = q_nullspace(list(equations.values()), ncols=len(unknowns))
    LOGGER.debug("Equivalence at degree %d: kernel of dimension %d", degree, len(kernel))
    if not kernel:
        return None
    for label, vec in _patterns(kernel):
        phi, psi = _assemble(vec, unknowns, b, ctx)
        if not (_invertible(phi) and _invertible(psi)):
            continue
        if phi @ d1 == d2 @ psi:
            LOGGER.debug("Witnesses found with %s", label)
            return phi, psi
    return None


def mf_equivalent(
    mf1: MatrixFactorization, mf2: MatrixFactorization, D: int = None
) -> EquivalenceVerdict:
    """Decide, within a degree cap, whether `d' = phi d psi^-1` for invertible `phi`, `psi`.

    The cokernel invariants are compared first; a difference proves the pairs
    inequivalent. Otherwise the linear system `phi d = d' psi` is solved for each degree
    up to `D` and its kernel scanned for a pair invertible at the origin: each basis
    vector, then combinations with the weights of `WEIGHTS`. Witnesses are checked
    exactly before they are returned.

    Raises:
        SameFRequired: If the equations or the sizes differ.

    """
    if mf1.b != mf2.b or mf1.F.F != mf2.F.F:
        raise SameFRequired(
            f"Equivalence needs the same F and size; got {mf1.F} (b = {mf1.b}) and {mf2.F} (b = {mf2.b})"
        )
    D = CONFIG.equivalence_degree if D is None else D
    certificate = screen_invariants(mf1, mf2)
    if certificate is not None:
        return EquivalenceVerdict(verdict=Verdict.INEQUIVALENT, certificate=certificate, degree=D)
    for degree in range(D + 1):
        found = _search(mf1.d, mf2.d, degree)
        if found is not None:
            phi, psi = found
            return EquivalenceVerdict(verdict=Verdict.EQUIVALENT, phi=phi, psi=psi, degree=D)
    return EquivalenceVerdict(verdict=Verdict.INCONCLUSIVE, degree=D)

"""Exact checks of matrix factorizations."""
from fractions import Fraction
from typing import List, Optional

from curvefact.exactalg import MPoly, PolyMatrix, poly_det
from curvefact.models import (
    CheckResult,
    ImplicitEquation,
    MatrixFactorization,
    MFVerification,
)
from curvefact.matfact.logger import LOGGER
from curvefact.matfact.syzygy import XY, syzygy_residual

__all__ = ("verify_mf", "det_ratio", "reduce_params")


def reduce_params(p: MPoly, F: ImplicitEquation) -> MPoly:
    """Drop parameter terms beyond the order an inexact normalization is valid to."""
    norm = F.normalization
    if norm.exact or not F.params:
        return p
    return p.truncate_degree(F.params, norm.param_order)


def det_ratio(det: MPoly, F: ImplicitEquation) -> Optional[Fraction]:
    """The nonzero rational `c` with `det = c F`, if there is one."""
    det = reduce_params(det, F)
    if det.is_zero():
        return None
    exp, lead = F.F.sorted_terms()[0]
    c = det.coefficient(dict(zip(F.F.vars, exp))) / lead
    if c and det == F.F * c:
        return c
    return None


def _product_check(mf: MatrixFactorization) -> CheckResult:
    F = mf.F.F
    for label, prod in (("d h", mf.d @ mf.h), ("h d", mf.h @ mf.d)):
        for i in range(mf.b):
            for j in range(mf.b):
                expected = F if i == j else MPoly.zero(F.vars)
                diff = reduce_params(prod[i, j] - expected, mf.F)
                if not diff.is_zero():
                    return CheckResult(
                        name="product",
                        passed=False,
                        witness=f"({label})[{i + 1},{j + 1}] - {'F' if i == j else '0'} = {diff}",
                    )
    return CheckResult(name="product", passed=True)


def _unit_entry(m: PolyMatrix, label: str) -> Optional[str]:
    for i in range(m.rows):
        for j in range(m.cols):
            if not m[i, j].coefficient_in({}, XY).is_zero():
                return f"{label}[{i + 1},{j + 1}] = {m[i, j]}"
    return None


def _minimality_check(mf: MatrixFactorization) -> CheckResult:
    # h = (1) when b = 1
    matrices = [(mf.d, "d")] + ([(mf.h, "h")] if mf.b > 1 else [])
    for m, label in matrices:
        witness = _unit_entry(m, label)
        if witness:
            return CheckResult(name="minimality", passed=False, witness=witness)
    return CheckResult(name="minimality", passed=True)


def _determinant_check(mf: MatrixFactorization) -> CheckResult:
    det = poly_det(mf.d)
    if det_ratio(det, mf.F) is None:
        return CheckResult(name="determinant", passed=False, witness=f"det(d) = {det}")
    return CheckResult(name="determinant", passed=True)


def _syzygy_check(mf: MatrixFactorization) -> CheckResult:
    for j, column in enumerate(mf.d.columns()):
        residual = syzygy_residual(column, mf.gens)
        if not residual.is_zero():
            return CheckResult(
                name="syzygies", passed=False, witness=f"column {j + 1}: {residual}"
            )
    return CheckResult(name="syzygies", passed=True)


def verify_mf(mf: MatrixFactorization) -> MFVerification:
    """Check a pair `(d, h)` exactly.

    The checks, in this order:

    - `product`: `d h = h d = F Id`;
    - `minimality`: every entry of `d` and `h` lies in the ideal `(x, y)`;
    - `determinant`: `det(d) = c F` for a nonzero rational `c`;
    - `syzygies`: every column of `d` is a relation of the generators, when known.

    Identities involving parameters are compared modulo the parameter order of an
    inexact normalization of F. Each failing check records its first failing entry.

    """
    checks: List[CheckResult] = [
        _product_check(mf),
        _minimality_check(mf),
        _determinant_check(mf),
    ]
    if mf.gens is not None:
        checks.append(_syzygy_check(mf))
    result = MFVerification(checks=tuple(checks))
    LOGGER.debug(
        "verify_mf: %s",
        ", ".join(f"{c.name}={'ok' if c.passed else 'FAILED'}" for c in result.checks),
    )
    return result

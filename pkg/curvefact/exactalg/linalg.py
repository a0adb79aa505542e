"""Exact sparse linear algebra over the rationals.

Vectors are dictionaries from sortable keys (t-exponents, column indices, ...) to
numbers. [`Echelon`][curvefact.exactalg.linalg.Echelon] keeps integer rows with
pairwise distinct pivots, the pivot of a row being its least key. Rows are combined
by cross-multiplication and divided by their content, so no fraction ever appears
inside the elimination.

"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

from curvefact.exactalg.series import TSeries

__all__ = ("Echelon", "echelon_pivot_orders", "q_nullspace", "rank")

Vector = Dict[Hashable, Any]


def _integral(vec: Vector) -> Tuple[Dict[Hashable, int], int]:
    """Scale a rational vector to a primitive integer vector.

    Returns:
        The integer vector and the factor it was multiplied by.

    """
    vec = {k: Fraction(v) for k, v in vec.items() if v}
    if not vec:
        return {}, Fraction(1)
    lcm = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vec.values()))
    ints = {k: int(v * lcm) for k, v in vec.items()}
    content = reduce(gcd, (abs(v) for v in ints.values()))
    factor = Fraction(lcm, content)
    return {k: v // content for k, v in ints.items()}, factor


def _combine(a: int, u: Dict[Hashable, int], b: int, v: Dict[Hashable, int]) -> Dict[Hashable, int]:
    """`a*u - b*v` without zero entries."""
    out = {k: a * c for k, c in u.items()}
    for k, c in v.items():
        value = out.get(k, 0) - b * c
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


class Echelon:
    """An incremental echelon form with distinct pivots.

    Each row may carry a payload (any object supporting `*` by integers and `-`, such
    as an [`MPoly`][curvefact.exactalg.mpoly.MPoly] recording which combination of
    inputs produced the row). Payloads undergo the same operations as their rows.

    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: Dict[Hashable, Dict[Hashable, int]] = {}
        self.payloads: Dict[Hashable, Any] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self.rows)

    def reduce(self, vec: Vector, payload: Any = None) -> Tuple[Dict[Hashable, int], Any]:
        """Head-reduce `vec` against the stored rows.

        Returns:
            The reduced primitive integer vector (empty when `vec` lies in the span) and
            its payload, transformed alongside.

        """
        cur, factor = _integral(vec)
        if not self.track:
            payload = None
        if payload is not None:
            payload = payload * factor
        while cur:
            lead = min(cur)
            row = self.rows.get(lead)
            if row is None:
                break
            a, b = row[lead], cur[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            cur = _combine(a, cur, b, row)
            if payload is not None:
                payload = payload * a - self.payloads[lead] * b
            if cur:
                content = reduce(gcd, (abs(c) for c in cur.values()))
                if content > 1:
                    cur = {k: c // content for k, c in cur.items()}
                    if payload is not None:
                        payload = payload * Fraction(1, content)
        return cur, payload

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)[0]

    def add(self, vec: Vector, payload: Any = None) -> Optional[Hashable]:
        """Insert `vec` into the span.

        Returns:
            The new pivot, or `None` when `vec` was already in the span.

        """
        cur, payload = self.reduce(vec, payload)
        if not cur:
            return None
        lead = min(cur)
        if cur[lead] < 0:
            cur = {k: -c for k, c in cur.items()}
            if payload is not None:
                payload = -payload
        self.rows[lead] = cur
        if self.track:
            self.payloads[lead] = payload
        return lead

    def row(self, pivot: Hashable) -> Dict[Hashable, Fraction]:
        """The stored row with pivot entry scaled to 1."""
        row = self.rows[pivot]
        lead = row[pivot]
        return {k: Fraction(c, lead) for k, c in row.items()}

    def payload(self, pivot: Hashable) -> Any:
        """The payload of a row, scaled like [`row`][curvefact.exactalg.linalg.Echelon.row]."""
        return self.payloads[pivot] * Fraction(1, self.rows[pivot][pivot])

    def copy(self) -> "Echelon":
        other = Echelon(self.track)
        other.rows = dict(self.rows)
        other.payloads = dict(self.payloads)
        return other

    def back_substitute(self) -> None:
        """Clear every pivot column above its pivot, giving the reduced echelon form."""
        for p in sorted(self.rows, reverse=True):
            prow = self.rows[p]
            for q in self.pivots:
                if q >= p:
                    break
                qrow = self.rows[q]
                c = qrow.get(p)
                if not c:
                    continue
                a, b = prow[p], c
                g = gcd(a, b)
                new = _combine(a // g, qrow, b // g, prow)
                if self.track:
                    self.payloads[q] = (
                        self.payloads[q] * (a // g) - self.payloads[p] * (b // g)
                    )
                content = reduce(gcd, (abs(v) for v in new.values()))
                if new[q] < 0:
                    content = -content
                self.rows[q] = {k: v // content for k, v in new.items()}
                if self.track:
                    self.payloads[q] = self.payloads[q] * Fraction(1, content)


def echelon_pivot_orders(vs: Sequence[TSeries]) -> Tuple[Set[int], List[TSeries]]:
    """Row-reduce series by leading t-order.

    Parameters:
        vs: Series sharing one truncation order.

    Returns:
        The set of orders of a triangular basis of the span, and that basis sorted by
        order with leading coefficients 1.

    """
    if not vs:
        return set(), []
    trunc = vs[0].trunc
    if any(v.trunc != trunc for v in vs):
        raise ValueError("echelon_pivot_orders needs series with a shared truncation.")
    ech = Echelon()
    for v in vs:
        ech.add(v.terms())
    basis = [TSeries.from_terms(ech.row(p), trunc) for p in ech.pivots]
    return set(ech.pivots), basis


def rank(m: Sequence[Sequence[Any]]) -> int:
    ech = Echelon()
    for row in m:
        ech.add({j: c for j, c in enumerate(row) if c})
    return len(ech)


def q_nullspace(m: Iterable[Any], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """An exact basis of the right nullspace of a rational matrix.

    Parameters:
        m: Rows, given as sequences or as sparse `{column: value}` dictionaries.
        ncols: Number of columns; required for sparse rows, else the row length.

    Returns:
        One vector per free column of the reduced echelon form, in column order, each
        scaled so its first nonzero entry is 1.

    """
    ech = Echelon()
    width = ncols
    for row in m:
        if isinstance(row, dict):
            sparse = row
        else:
            sparse = {j: c for j, c in enumerate(row) if c}
            width = len(row) if width is None else width
        ech.add(sparse)
    if width is None:
        raise ValueError("q_nullspace needs ncols for sparse or empty input.")
    ech.back_substitute()
    pivots = set(ech.pivots)
    basis = []
    for f in range(width):
        if f in pivots:
            continue
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for p in ech.pivots:
            if p > f:
                break
            row = ech.rows[p]
            c = row.get(f)
            if c:
                vec[p] = Fraction(-c, row[p])
        lead = next(c for c in vec if c)
        basis.append([c / lead for c in vec])
    return basis

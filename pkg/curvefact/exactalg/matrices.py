"""Matrices of polynomials, fraction-free determinants and resultants."""
from fractions import Fraction
from typing import Callable, Iterable, List, Mapping, Sequence, Tuple, Union

from curvefact.exceptions import NotSquare, ZeroDegree
from curvefact.exactalg.mpoly import MPoly, merge_vars

__all__ = ("PolyMatrix", "poly_det", "poly_adjugate", "sylvester_resultant")

Number = Union[int, Fraction]


class PolyMatrix:
    """An immutable rectangular matrix of [`MPoly`][curvefact.exactalg.mpoly.MPoly]
    entries sharing one variable context."""

    __slots__ = ("entries", "vars")

    def __init__(self, rows: Iterable[Iterable[Union[MPoly, Number]]], vars: Sequence[str] = ()):
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise ValueError("A PolyMatrix needs at least one row and one column.")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("All rows of a PolyMatrix must have the same length.")
        ctx = merge_vars(
            vars, *(entry.vars for row in rows for entry in row if isinstance(entry, MPoly))
        )
        self.vars = ctx
        self.entries: Tuple[Tuple[MPoly, ...], ...] = tuple(
            tuple(
                entry.with_vars(ctx) if isinstance(entry, MPoly) else MPoly.const(entry, ctx)
                for entry in row
            )
            for row in rows
        )

    @classmethod
    def identity(cls, n: int, vars: Sequence[str] = ()) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], vars)

    @classmethod
    def zeros(cls, rows: int, cols: int, vars: Sequence[str] = ()) -> "PolyMatrix":
        return cls([[0] * cols for _ in range(rows)], vars)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[MPoly]], vars: Sequence[str] = ()) -> "PolyMatrix":
        return cls([list(row) for row in zip(*columns)], vars)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> MPoly:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[MPoly, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[MPoly, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Tuple[MPoly, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def __iter__(self):
        for row in self.entries:
            yield from row

    def map(self, fn: Callable[[MPoly], MPoly]) -> "PolyMatrix":
        return PolyMatrix([[fn(entry) for entry in row] for row in self.entries], self.vars)

    def with_vars(self, vars: Sequence[str]) -> "PolyMatrix":
        return PolyMatrix(self.entries, merge_vars(vars, self.vars))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.columns(), self.vars)

    @property
    def T(self) -> "PolyMatrix":
        return self.transpose()

    def subs(self, assignment: Mapping[str, Union[Number, MPoly]]) -> "PolyMatrix":
        return self.map(lambda entry: entry.subs(assignment))

    def constant_part(self) -> List[List[Fraction]]:
        """Evaluate every entry at the origin."""
        return [[entry.constant_term for entry in row] for row in self.entries]

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self)

    def with_entry(self, i: int, j: int, value: MPoly) -> "PolyMatrix":
        rows = [list(row) for row in self.entries]
        rows[i][j] = value
        return PolyMatrix(rows, self.vars)

    def scale_column(self, j: int, c: Union[Number, MPoly]) -> "PolyMatrix":
        rows = [list(row) for row in self.entries]
        for row in rows:
            row[j] = row[j] * c
        return PolyMatrix(rows, self.vars)

    def minor(self, i: int, j: int) -> "PolyMatrix":
        """The submatrix without row `i` and column `j`."""
        return PolyMatrix(
            [
                [entry for c, entry in enumerate(row) if c != j]
                for r, row in enumerate(self.entries)
                if r != i
            ],
            self.vars,
        )

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"Cannot add matrices of shapes {self.shape} and {other.shape}")
        return PolyMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            merge_vars(self.vars, other.vars),
        )

    def __neg__(self) -> "PolyMatrix":
        return self.map(lambda entry: -entry)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c: Union[Number, MPoly]) -> "PolyMatrix":
        if not isinstance(c, (int, Fraction, MPoly)):
            return NotImplemented
        return self.map(lambda entry: entry * c)

    __rmul__ = __mul__

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"Cannot multiply matrices of shapes {self.shape} and {other.shape}"
            )
        ctx = merge_vars(self.vars, other.vars)
        out = []
        for row in self.entries:
            new_row = []
            for j in range(other.cols):
                acc = MPoly.zero(ctx)
                for k, a in enumerate(row):
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(out, ctx)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self, other)
        )

    def __hash__(self) -> int:
        return hash(tuple(self))

    def tolist(self) -> List[List[str]]:
        """Canonical strings of the entries, row by row."""
        return [[str(entry) for entry in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(row) + "]" for row in self.tolist()) + "]"

    def __repr__(self) -> str:
        return f"PolyMatrix({self})"

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def validate(cls, v):
        if isinstance(v, cls):
            return v
        if isinstance(v, (list, tuple)):
            return cls(v)
        raise TypeError(f"Expected a PolyMatrix, got {type(v).__name__}")


def _bareiss(rows: List[List[MPoly]]) -> MPoly:
    n = len(rows)
    ctx = rows[0][0].vars
    sign = 1
    prev = MPoly.const(1, ctx)
    m = [list(row) for row in rows]
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if not m[i][k].is_zero()]
        if not candidates:
            return MPoly.zero(ctx)
        # Smallest pivot keeps the intermediate minors small
        pivot = min(candidates, key=lambda i: (len(m[i][k].terms), i))
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        akk = m[k][k]
        for i in range(k + 1, n):
            aik = m[i][k]
            for j in range(k + 1, n):
                num = akk * m[i][j]
                if not aik.is_zero() and not m[k][j].is_zero():
                    num = num - aik * m[k][j]
                m[i][j] = num.divexact(prev) if not num.is_zero() else num
            m[i][k] = MPoly.zero(ctx)
        prev = akk
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def poly_det(m: PolyMatrix) -> MPoly:
    """The determinant by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of `m`, so each division is exact.

    Raises:
        NotSquare: If `m` is not square.

    """
    if not m.is_square():
        raise NotSquare(f"Cannot take the determinant of a {m.rows}x{m.cols} matrix.")
    if m.rows == 1:
        return m[0, 0]
    if m.rows == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return _bareiss([list(row) for row in m.entries])


def poly_adjugate(m: PolyMatrix) -> PolyMatrix:
    """The adjugate (classical adjoint), with `m @ adj(m) == adj(m) @ m == det(m) * Id`.

    Raises:
        NotSquare: If `m` is not square.

    """
    if not m.is_square():
        raise NotSquare(f"Cannot take the adjugate of a {m.rows}x{m.cols} matrix.")
    n = m.rows
    if n == 1:
        return PolyMatrix.identity(1, m.vars)
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = poly_det(m.minor(i, j))
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return PolyMatrix(adj, m.vars)


def sylvester_resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """The resultant of `f` and `g` with respect to `var`.

    The Sylvester matrix has `deg_var(g)` shifted rows of the coefficients of `f`
    (highest degree first) followed by `deg_var(f)` shifted rows of those of `g`.

    Parameters:
        f: First polynomial.
        g: Second polynomial.
        var: The variable to eliminate.

    Raises:
        ZeroDegree: If `f` or `g` does not involve `var`.

    Returns:
        The determinant of the Sylvester matrix, with `var` removed from the context.

    """
    f, g = f._unify(g)
    m, n = f.degree(var), g.degree(var)
    if m < 1 or n < 1:
        raise ZeroDegree(
            f"Both polynomials need positive degree in {var}; got {m} for {f} and {n} for {g}"
        )
    ctx = f.vars
    zero = MPoly.zero(ctx)
    fc = [f.coeff(var, m - k) for k in range(m + 1)]
    gc = [g.coeff(var, n - k) for k in range(n + 1)]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    res = poly_det(PolyMatrix(rows, ctx))
    return res.drop_vars([var])

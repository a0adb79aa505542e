"""Truncated univariate power series in `t` with exact rational coefficients.

A [`TSeries`][curvefact.exactalg.series.TSeries] stores the coefficients of
`t^0, ..., t^(N-1)` where `N` is its truncation order, the first order about which
nothing is known. Every operation returns the tightest truncation it can justify.

"""
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

from curvefact.exceptions import BadOrder, NonUnitInput

__all__ = (
    "Rat",
    "TSeries",
    "series_arith",
    "series_order",
    "series_eth_root",
    "series_inverse",
    "series_reverse",
    "series_compose",
)

Rat = Fraction
"""Exact rationals. Python's `Fraction` is always reduced with a positive denominator."""

Number = Union[int, Fraction]


class TSeries:
    """An immutable truncated power series `c_0 + c_1 t + ... + O(t^N)`.

    Attributes:
        coeffs: The `N` known coefficients as `Fraction`s.

    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number], trunc: Optional[int] = None):
        """
        Parameters:
            coeffs: Coefficients indexed by t-exponent.
            trunc: Truncation order; `coeffs` is padded with zeros or cut to this length.
                Defaults to the number of coefficients given.

        """
        values = [Fraction(c) for c in coeffs]
        if trunc is not None:
            values = (values + [Fraction(0)] * trunc)[:trunc]
        if not values:
            raise ValueError("A TSeries needs a positive truncation order.")
        self.coeffs = tuple(values)

    @classmethod
    def from_terms(cls, terms: dict, trunc: int) -> "TSeries":
        """Build a series from a mapping `exponent -> coefficient`, dropping exponents `>= trunc`."""
        values = [Fraction(0)] * trunc
        for k, c in terms.items():
            if 0 <= k < trunc:
                values[k] += Fraction(c)
        return cls(values)

    @classmethod
    def monomial(cls, k: int, trunc: int, coeff: Number = 1) -> "TSeries":
        return cls.from_terms({k: coeff}, trunc)

    @classmethod
    def one(cls, trunc: int) -> "TSeries":
        return cls.monomial(0, trunc)

    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    @property
    def order(self) -> Optional[int]:
        return series_order(self)

    def terms(self) -> dict:
        """Nonzero coefficients as a mapping `exponent -> coefficient`."""
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, trunc: int) -> "TSeries":
        """Forget every coefficient from `t^trunc` on."""
        if trunc > self.trunc:
            raise ValueError(
                f"Cannot raise the truncation of a series from {self.trunc} to {trunc}."
            )
        return TSeries(self.coeffs[:trunc])

    def shift(self, k: int) -> "TSeries":
        """Multiply by `t^k`; the truncation grows by `k`."""
        return TSeries([0] * k + list(self.coeffs))

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        if k >= self.trunc:
            raise IndexError(f"Coefficient of t^{k} is unknown at truncation {self.trunc}.")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.trunc

    def __eq__(self, other) -> bool:
        if isinstance(other, TSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TSeries.monomial(0, self.trunc, other)
        return NotImplemented

    def __add__(self, other) -> "TSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other) -> "TSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(self, other, "sub")

    def __rsub__(self, other) -> "TSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(other, self, "sub")

    def __neg__(self) -> "TSeries":
        return TSeries([-c for c in self.coeffs])

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, (int, Fraction)):
            return TSeries([c * other for c in self.coeffs])
        if isinstance(other, TSeries):
            return series_arith(self, other, "mul")
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TSeries":
        if n < 0:
            raise ValueError("Negative powers need series_inverse.")
        result = TSeries.one(self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"TSeries({self})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        tail = f"O(t^{self.trunc})"
        if not parts:
            return tail
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        rest = "".join(f" {s} {b}" for s, b in parts[1:])
        return f"{head}{rest} + {tail}"

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def validate(cls, v):
        if not isinstance(v, cls):
            raise TypeError(f"Expected a TSeries, got {type(v).__name__}")
        return v


def _mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction], trunc: int) -> List[Fraction]:
    out = [Fraction(0)] * trunc
    for i, ai in enumerate(a[:trunc]):
        if not ai:
            continue
        for j in range(min(len(b), trunc - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def series_arith(a: TSeries, b: TSeries, op: str) -> TSeries:
    """Add, subtract or multiply two series.

    The result is known up to `min(a.trunc, b.trunc)` for every operation.

    Parameters:
        a: Left operand.
        b: Right operand.
        op: One of `"add"`, `"sub"`, `"mul"`.

    Returns:
        The exact result at the combined truncation.

    """
    trunc = min(a.trunc, b.trunc)
    if op == "add":
        return TSeries([x + y for x, y in zip(a.coeffs[:trunc], b.coeffs[:trunc])])
    if op == "sub":
        return TSeries([x - y for x, y in zip(a.coeffs[:trunc], b.coeffs[:trunc])])
    if op == "mul":
        return TSeries(_mul_coeffs(a.coeffs, b.coeffs, trunc))
    raise ValueError(f"Unknown series operation {op!r}")


def series_order(a: TSeries) -> Optional[int]:
    """Least exponent with a nonzero coefficient, or `None` when the order is unknown
    (every stored coefficient vanishes, so the order is at least `a.trunc`)."""
    for k, c in enumerate(a.coeffs):
        if c:
            return k
    return None


def series_eth_root(u: TSeries, e: int) -> TSeries:
    """The `e`-th root of a unit series with constant term 1.

    Coefficients are produced one at a time by the recurrence for powers of a series,
    `r_n = 1/n * sum_{k=1..n} ((1/e + 1) k - n) u_k r_{n-k}`, so that `r^e = u`
    up to `u.trunc`.

    Parameters:
        u: Series with `u[0] == 1`.
        e: Positive integer.

    Raises:
        NonUnitInput: If the constant term is not 1.

    Returns:
        The root `r` with `r[0] == 1`.

    """
    if e < 1:
        raise ValueError(f"Root index must be positive, not {e}")
    if u.coeffs[0] != 1:
        raise NonUnitInput(
            f"series_eth_root needs constant term 1, got {u.coeffs[0]} in {u}"
        )
    alpha1 = Fraction(1, e) + 1
    r = [Fraction(1)]
    for n in range(1, u.trunc):
        acc = Fraction(0)
        for k in range(1, n + 1):
            uk = u.coeffs[k]
            if uk:
                acc += (alpha1 * k - n) * uk * r[n - k]
        r.append(acc / n)
    return TSeries(r)


def series_inverse(u: TSeries) -> TSeries:
    """The multiplicative inverse of a unit series.

    Raises:
        NonUnitInput: If the constant term vanishes.

    """
    u0 = u.coeffs[0]
    if not u0:
        raise NonUnitInput(f"{u} is not a unit: its constant term vanishes.")
    inv = [1 / u0]
    for n in range(1, u.trunc):
        acc = sum(
            (u.coeffs[k] * inv[n - k] for k in range(1, n + 1) if u.coeffs[k]),
            Fraction(0),
        )
        inv.append(-acc / u0)
    return TSeries(inv)


def series_compose(f: TSeries, g: TSeries) -> TSeries:
    """The composition `f(g(t))`.

    With `v` the order of `g` (or `g.trunc` when unknown), the tail of `f` only
    contributes from `t^(f.trunc * v)` on and the tail of `g` from `t^(g.trunc)` on,
    so the result has truncation `min(f.trunc * v, g.trunc)`.

    Raises:
        BadOrder: If `g` has a nonzero constant term.

    """
    if g.coeffs[0]:
        raise BadOrder(f"Cannot compose with {g}: the inner series must have order >= 1.")
    v = series_order(g)
    v = g.trunc if v is None else v
    trunc = min(f.trunc * v, g.trunc)
    result = [Fraction(0)] * trunc
    power = [Fraction(1)] + [Fraction(0)] * (trunc - 1)
    for k, fk in enumerate(f.coeffs):
        if k * v >= trunc:
            break
        if fk:
            for i in range(k * v, trunc):
                if power[i]:
                    result[i] += fk * power[i]
        power = _mul_coeffs(power, g.coeffs, trunc)
    return TSeries(result)


def series_reverse(f: TSeries) -> TSeries:
    """The compositional inverse `g` of an order-1 series, `f(g(t)) = t` up to `f.trunc`.

    The coefficient `g_n` enters `[t^n] f(g)` only through `f_1 g_n`, so each
    coefficient is solved for in turn.

    Raises:
        BadOrder: If `f` does not have order exactly 1.

    """
    if series_order(f) != 1:
        raise BadOrder(f"series_reverse needs an order-1 series, got {f}")
    trunc = f.trunc
    f1 = f.coeffs[1]
    g = [Fraction(0), 1 / f1] + [Fraction(0)] * (trunc - 2)
    for n in range(2, trunc):
        composed = series_compose(TSeries(f.coeffs[: n + 1]), TSeries(g[: n + 1]))
        g[n] = -composed.coeffs[n] / f1
    return TSeries(g)

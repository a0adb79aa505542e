"""Sparse multivariate polynomials over the rationals.

An [`MPoly`][curvefact.exactalg.mpoly.MPoly] lives in an ordered variable context,
e.g. `("x", "y", "s6")`, and maps exponent tuples to nonzero `Fraction`s. Arithmetic
between polynomials of different contexts first merges the contexts (left operand's
variables first), so callers only need to fix an order where printing matters.

Terms are printed in the local degree order used for singularities: ascending total
degree, ties broken lexicographically with the first variable largest. This is the
order in which `y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7` is displayed.

"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from curvefact.exceptions import NotDivisible
from curvefact.exactalg.series import TSeries

__all__ = ("MPoly", "merge_vars")

Number = Union[int, Fraction]
Exponent = Tuple[int, ...]


def merge_vars(*contexts: Sequence[str]) -> Tuple[str, ...]:
    """Concatenate variable contexts, keeping the first occurrence of each name."""
    out = []
    for ctx in contexts:
        for v in ctx:
            if v not in out:
                out.append(v)
    return tuple(out)


class MPoly:
    """An immutable sparse polynomial with rational coefficients.

    Attributes:
        vars: The ordered variable names.
        terms: Mapping from exponent tuples (one entry per variable) to nonzero coefficients.

    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(
        self,
        terms: Optional[Mapping[Exponent, Number]] = None,
        vars: Sequence[str] = (),
    ):
        self.vars = tuple(vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.vars):
                raise ValueError(
                    f"Exponent {exp} does not match the variables {self.vars}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"Negative exponent {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms: Dict[Exponent, Fraction] = clean
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, vars: Sequence[str] = ()) -> "MPoly":
        return cls({}, vars)

    @classmethod
    def const(cls, c: Number, vars: Sequence[str] = ()) -> "MPoly":
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str] = None) -> "MPoly":
        vars = tuple(vars) if vars else (name,)
        if name not in vars:
            vars = vars + (name,)
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls({exp: 1}, vars)

    @classmethod
    def monomial(cls, powers: Mapping[str, int], vars: Sequence[str], coeff: Number = 1):
        """The term `coeff * prod(v^k)` in the context `vars`."""
        vars = merge_vars(vars, powers.keys())
        return cls({tuple(powers.get(v, 0) for v in vars): coeff}, vars)

    @classmethod
    def from_series(cls, s: TSeries, var: str = "t", vars: Sequence[str] = None) -> "MPoly":
        """The polynomial with the stored coefficients of a series."""
        vars = merge_vars(vars or (), (var,))
        i = vars.index(var)
        return cls(
            {
                tuple(k if j == i else 0 for j in range(len(vars))): c
                for k, c in s.terms().items()
            },
            vars,
        )

    # Context handling

    def with_vars(self, vars: Sequence[str]) -> "MPoly":
        """Re-embed into a context containing all variables in use."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        index = {v: i for i, v in enumerate(vars)}
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(vars)
            for v, e in zip(self.vars, exp):
                if e:
                    if v not in index:
                        raise ValueError(
                            f"Variable {v!r} of {self} is missing from the context {vars}"
                        )
                    new[index[v]] = e
            terms[tuple(new)] = c
        return MPoly(terms, vars)

    def _unify(self, other: "MPoly") -> Tuple["MPoly", "MPoly"]:
        if self.vars == other.vars:
            return self, other
        vars = merge_vars(self.vars, other.vars)
        return self.with_vars(vars), other.with_vars(vars)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.vars)
        return NotImplemented

    @property
    def free_vars(self) -> Tuple[str, ...]:
        """Variables occurring with a positive exponent, in context order."""
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    # Queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self, var: str = None) -> int:
        """Total degree, or the degree in `var`; `-1` for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(exp) for exp in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(exp[i] for exp in self.terms)

    def degree_in(self, vars: Iterable[str]) -> int:
        """Total degree in a subset of the variables."""
        if not self.terms:
            return -1
        idx = [self.vars.index(v) for v in vars if v in self.vars]
        return max(sum(exp[i] for i in idx) for exp in self.terms)

    def order_in(self, vars: Iterable[str]) -> int:
        """Least total degree in a subset of the variables; `-1` for zero."""
        if not self.terms:
            return -1
        idx = [self.vars.index(v) for v in vars if v in self.vars]
        return min(sum(exp[i] for i in idx) for exp in self.terms)

    def coeff(self, var: str, k: int) -> "MPoly":
        """The coefficient of `var^k`, as a polynomial in the same context."""
        if var not in self.vars:
            return self if k == 0 else MPoly.zero(self.vars)
        i = self.vars.index(var)
        return MPoly(
            {
                exp[:i] + (0,) + exp[i + 1 :]: c
                for exp, c in self.terms.items()
                if exp[i] == k
            },
            self.vars,
        )

    def coefficient(self, powers: Mapping[str, int]) -> Fraction:
        """The rational coefficient of one monomial given as `{var: exponent}`."""
        for v, e in powers.items():
            if e and v not in self.vars:
                return Fraction(0)
        exp = tuple(powers.get(v, 0) for v in self.vars)
        return self.terms.get(exp, Fraction(0))

    def coefficient_in(self, powers: Mapping[str, int], vars: Sequence[str]) -> "MPoly":
        """The coefficient of the monomial `powers` in the variables `vars`, as a
        polynomial in the remaining variables."""
        idx = [self.vars.index(v) for v in vars if v in self.vars]
        target = {self.vars.index(v): e for v, e in powers.items() if v in self.vars}
        if any(e and v not in self.vars for v, e in powers.items()):
            return MPoly.zero(self.vars)
        terms = {}
        for exp, c in self.terms.items():
            if all(exp[i] == target.get(i, 0) for i in idx):
                new = list(exp)
                for i in idx:
                    new[i] = 0
                terms[tuple(new)] = c
        return MPoly(terms, self.vars)

    def split(self, vars: Sequence[str]) -> Dict[Exponent, "MPoly"]:
        """Group terms by their exponents in `vars`; values are polynomials in the other variables."""
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        groups: Dict[Exponent, Dict[Exponent, Fraction]] = {}
        for exp, c in self.terms.items():
            key = tuple(exp[i] if i is not None else 0 for i in idx)
            new = list(exp)
            for i in idx:
                if i is not None:
                    new[i] = 0
            groups.setdefault(key, {})[tuple(new)] = c
        return {k: MPoly(v, self.vars) for k, v in groups.items()}

    def map_coefficients(self, fn) -> "MPoly":
        return MPoly({exp: fn(c) for exp, c in self.terms.items()}, self.vars)

    def truncate_degree(self, vars: Sequence[str], order: int) -> "MPoly":
        """Drop every term whose total degree in `vars` is at least `order`."""
        idx = [self.vars.index(v) for v in vars if v in self.vars]
        return MPoly(
            {
                exp: c
                for exp, c in self.terms.items()
                if sum(exp[i] for i in idx) < order
            },
            self.vars,
        )

    def content(self) -> Fraction:
        """The positive rational `c` with `self / c` primitive over the integers."""
        if not self.terms:
            return Fraction(0)
        nums = reduce(gcd, (abs(c.numerator) for c in self.terms.values()))
        dens = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.terms.values()))
        return Fraction(nums, dens)

    def to_series(self, var: str = "t", trunc: int = None) -> TSeries:
        """Convert a polynomial in `var` alone to a series.

        Parameters:
            var: The series variable.
            trunc: Truncation order, by default one more than the degree.

        Raises:
            ValueError: If any other variable occurs.

        """
        others = [v for v in self.free_vars if v != var]
        if others:
            raise ValueError(f"{self} depends on {others}, not only on {var}")
        deg = max(self.degree(var), 0)
        trunc = deg + 1 if trunc is None else trunc
        if var not in self.vars:
            return TSeries.from_terms({0: self.constant_term}, trunc)
        i = self.vars.index(var)
        return TSeries.from_terms({exp[i]: c for exp, c in self.terms.items()}, trunc)

    def t_terms(self, var: str = "t") -> Dict[int, Fraction]:
        """Coefficients of a polynomial in `var` alone as `{exponent: coefficient}`."""
        if var not in self.vars:
            return {0: self.constant_term} if self.terms else {}
        i = self.vars.index(var)
        others = [v for v in self.free_vars if v != var]
        if others:
            raise ValueError(f"{self} depends on {others}, not only on {var}")
        return {exp[i]: c for exp, c in self.terms.items()}

    # Arithmetic

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._unify(other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return MPoly(terms, a.vars)

    def __radd__(self, other) -> "MPoly":
        return self.__add__(other)

    def __neg__(self) -> "MPoly":
        return MPoly({exp: -c for exp, c in self.terms.items()}, self.vars)

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero(self.vars)
            return MPoly({exp: c * other for exp, c in self.terms.items()}, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._unify(other)
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                terms[exp] = terms.get(exp, 0) + ca * cb
        return MPoly(terms, a.vars)

    def __rmul__(self, other) -> "MPoly":
        return self.__mul__(other)

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, MPoly):
            return self.divexact(other)
        return NotImplemented

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("Negative powers are not polynomials.")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _leading(self) -> Tuple[Exponent, Fraction]:
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    def divexact(self, other: "MPoly") -> "MPoly":
        """Exact division by leading terms in the graded lexicographic order.

        Raises:
            ZeroDivisionError: If `other` is zero.
            NotDivisible: If `other` does not divide `self`.

        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError(f"Division of {self} by zero")
        rem, div = self._unify(other)
        lexp, lc = div._leading()
        quotient: Dict[Exponent, Fraction] = {}
        while not rem.is_zero():
            rexp, rc = rem._leading()
            qexp = tuple(x - y for x, y in zip(rexp, lexp))
            if any(e < 0 for e in qexp):
                raise NotDivisible(f"{other} does not divide {self}")
            qc = rc / lc
            quotient[qexp] = qc
            rem = rem - MPoly({qexp: qc}, rem.vars) * div
        return MPoly(quotient, div.vars)

    def subs(self, assignment: Mapping[str, Union[Number, "MPoly"]]) -> "MPoly":
        """Substitute polynomials or rationals for variables.

        Variables not in `assignment` are kept. Substituted variables remain in the
        context, so results can still be compared with their inputs.

        """
        keys = [v for v in self.vars if v in assignment]
        if not keys:
            return self
        values = {
            v: (a if isinstance(a, MPoly) else MPoly.const(a, self.vars))
            for v, a in assignment.items()
            if v in self.vars
        }
        ctx = merge_vars(self.vars, *(p.vars for p in values.values()))
        values = {v: p.with_vars(ctx) for v, p in values.items()}
        kept = [i for i, v in enumerate(self.vars) if v not in assignment]
        powers: Dict[Tuple[str, int], MPoly] = {}

        def power(v: str, k: int) -> MPoly:
            if (v, k) not in powers:
                powers[(v, k)] = values[v] ** k
            return powers[(v, k)]

        result = MPoly.zero(ctx)
        for exp, c in self.terms.items():
            mono = [0] * len(ctx)
            for i in kept:
                mono[ctx.index(self.vars[i])] = exp[i]
            term = MPoly({tuple(mono): c}, ctx)
            for v in keys:
                k = exp[self.vars.index(v)]
                if k:
                    term = term * power(v, k)
            result = result + term
        return result

    def __call__(self, **assignment) -> "MPoly":
        return self.subs(assignment)

    def drop_vars(self, vars: Iterable[str]) -> "MPoly":
        """Remove unused variables from the context."""
        vars = set(vars)
        if set(self.free_vars) & vars:
            raise ValueError(f"{self} still depends on {set(self.free_vars) & vars}")
        return self.with_vars(tuple(v for v in self.vars if v not in vars))

    # Comparison and printing

    def _key(self):
        return frozenset(
            (tuple((v, e) for v, e in zip(self.vars, exp) if e), c)
            for exp, c in self.terms.items()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def sorted_terms(self):
        """Terms in printing order: ascending total degree, then descending lexicographic."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), [-e for e in item[0]])
        )

    def _mono_str(self, exp: Exponent) -> str:
        factors = []
        for v, e in zip(self.vars, exp):
            if e == 1:
                factors.append(v)
            elif e:
                factors.append(f"{v}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for n, (exp, c) in enumerate(self.sorted_terms()):
            mono = self._mono_str(exp)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if n == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r}, vars={self.vars})"

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def validate(cls, v):
        if isinstance(v, (int, Fraction)):
            return cls.const(v)
        if not isinstance(v, cls):
            raise TypeError(f"Expected an MPoly, got {type(v).__name__}")
        return v

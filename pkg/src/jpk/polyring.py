"""Sparse multivariate polynomials in z_1..z_r over Q(d) (or a specialization).

An ``MPoly`` maps exponent tuples of length r to nonzero coefficients.  Values
are treated as immutable; every operation returns a new polynomial.
"""
from __future__ import annotations

from gmpy2 import mpq

from itertools import combinations
from math import comb

from .scalars import coeff_parts

DEGREE_CAP = 64


class ArityMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class DegreeCapExceeded(ArithmeticError):
    pass


def grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms=None):
        self.r = r
        self.terms = {}
        if terms:
            for k, v in terms.items():
                k = tuple(k)
                if len(k) != r:
                    raise ArityMismatch(f"monomial {k} has length != {r}")
                if v:
                    self.terms[k] = v

    @classmethod
    def _raw(cls, r, terms):
        p = object.__new__(cls)
        p.r = r
        p.terms = terms
        return p

    @classmethod
    def const(cls, r, c):
        return cls._raw(r, {(0,) * r: c} if c else {})

    @classmethod
    def var(cls, r, j):
        """The coordinate z_j, 1-based."""
        if not 1 <= j <= r:
            raise IndexError(f"variable index {j} out of range 1..{r}")
        e = [0] * r
        e[j - 1] = 1
        return cls._raw(r, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def _check(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.r, other)
        if other.r != self.r:
            raise ArityMismatch(f"arity {self.r} vs {other.r}")
        return other

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.r == other.r and (self - other).is_zero()

    def __neg__(self):
        return MPoly._raw(self.r, {k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v
        return MPoly._raw(self.r, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        if not c:
            return MPoly._raw(self.r, {})
        if c == 1:
            return self
        return MPoly._raw(self.r, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        other = self._check(other)
        if other.degree() + self.degree() > DEGREE_CAP:
            raise DegreeCapExceeded(f"product degree exceeds {DEGREE_CAP}")
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t = v1 * v2
                if k in out:
                    out[k] = out[k] + t
                else:
                    out[k] = t
        return MPoly._raw(self.r, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(mpq(1) / c)

    def __pow__(self, n: int):
        out = MPoly.const(self.r, 1)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, j: int):
        """Partial derivative in z_j (1-based)."""
        if not 1 <= j <= self.r:
            raise IndexError(f"variable index {j} out of range 1..{self.r}")
        i = j - 1
        out = {}
        for k, v in self.terms.items():
            e = k[i]
            if e:
                kk = k[:i] + (e - 1,) + k[i + 1:]
                out[kk] = v * e
        return MPoly._raw(self.r, out)

    def euler_component(self, j: int):
        """z_j * d/dz_j."""
        i = j - 1
        return MPoly._raw(self.r, {k: v * k[i] for k, v in self.terms.items() if k[i]})

    def __call__(self, point):
        return self.eval(point)

    def eval(self, point):
        if len(point) != self.r:
            raise ArityMismatch(f"point of length {len(point)} for arity {self.r}")
        powers = [_power_table(x, max((k[i] for k in self.terms), default=0)) for i, x in enumerate(point)]
        acc = 0
        for k, v in self.terms.items():
            t = v
            for i, e in enumerate(k):
                if e:
                    t = t * powers[i][e]
            acc = acc + t
        return acc

    def exact_div(self, g: "MPoly") -> "MPoly":
        """Quotient q with self = q*g; raises NotDivisible otherwise."""
        g = self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm = max(g.terms)
        lc = g.terms[lm]
        rest = [(k, v) for k, v in g.terms.items() if k != lm]
        rem = dict(self.terms)
        q = {}
        while rem:
            m = max(rem)
            c = rem.pop(m)
            shift = tuple(a - b for a, b in zip(m, lm))
            if min(shift) < 0:
                raise NotDivisible(f"leading monomial {m} not divisible by {lm}")
            t = c if lc == 1 else c / lc
            q[shift] = t
            for k, v in rest:
                kk = tuple(a + b for a, b in zip(shift, k))
                s = rem.get(kk, 0) - t * v
                if s:
                    rem[kk] = s
                elif kk in rem:
                    del rem[kk]
        return MPoly._raw(self.r, q)

    def shift_ones(self):
        """Substitute z_i -> 1 + z_i."""
        out = MPoly._raw(self.r, {})
        cache = {}
        for k, v in self.terms.items():
            term = MPoly.const(self.r, v)
            for i, e in enumerate(k):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = _binomial_power(self.r, i, e)
                    term = term * cache[key]
            out = out + term
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __repr__(self):
        return f"MPoly({self.r}, {format_mpoly(self)!r})"

    def __str__(self):
        return format_mpoly(self)


def _power_table(x, n):
    out = [1, x]
    for _ in range(n - 1):
        out.append(out[-1] * x)
    return out


def _binomial_power(r, i, e):
    terms = {}
    for j in range(e + 1):
        k = [0] * r
        k[i] = j
        terms[tuple(k)] = comb(e, j)
    return MPoly._raw(r, terms)


def vandermonde(r: int) -> MPoly:
    """prod_{i<j} (z_i - z_j)."""
    if r < 1:
        raise ValueError("r must be positive")
    out = MPoly.const(r, 1)
    for i, j in combinations(range(1, r + 1), 2):
        out = out * (MPoly.var(r, i) - MPoly.var(r, j))
    return out


def format_monomial(k) -> str:
    parts = []
    for i, e in enumerate(k, 1):
        if e == 1:
            parts.append(f"z{i}")
        elif e:
            parts.append(f"z{i}^{e}")
    return "*".join(parts)


def format_mpoly(f: MPoly) -> str:
    if f.is_zero():
        return "0"
    text = ""
    for k, v in f.sorted_terms():
        mono = format_monomial(k)
        neg, c = coeff_parts(v)
        if not mono:
            body = c
        elif c == "1":
            body = mono
        else:
            body = f"{c}*{mono}"
        if not text:
            text = ("-" if neg else "") + body
        else:
            text += (" - " if neg else " + ") + body
    return text

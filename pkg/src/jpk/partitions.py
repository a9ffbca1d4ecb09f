"""Partitions of length <= r and symmetric polynomials in the monomial basis.

Partitions are plain tuples, always zero-padded to length r.  Enumeration is
graded-lex: weight ascending, then lexicographically descending within a
weight (a linear extension of the dominance order, largest first).
"""
from __future__ import annotations

from gmpy2 import mpq

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .polyring import ArityMismatch, MPoly, format_monomial
from .scalars import coeff_parts


class NotSymmetric(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


def is_partition(x) -> bool:
    return all(isinstance(v, int) for v in x) and all(
        x[i] >= x[i + 1] for i in range(len(x) - 1)
    ) and (not x or x[-1] >= 0)


def normalize(parts, r: int) -> tuple:
    """Zero-pad a partition to length r, validating it."""
    parts = tuple(int(p) for p in parts)
    if len(parts) > r:
        raise InvalidPartition(f"partition longer than r: {parts} with r={r}")
    parts = parts + (0,) * (r - len(parts))
    if not is_partition(parts):
        raise InvalidPartition(f"not a partition: {parts}")
    return parts


def parse_partition(text: str, r: int) -> tuple:
    text = text.strip()
    if not text:
        return (0,) * r
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise InvalidPartition(f"bad partition literal {text!r}") from exc
    return normalize(parts, r)


def format_partition(m) -> str:
    return ",".join(str(v) for v in m)


def weight(m) -> int:
    return sum(m)


def _same_r(k, m):
    if len(k) != len(m):
        raise ArityMismatch(f"partitions of different length: {k}, {m}")


def dominance_leq(k, m) -> bool:
    _same_r(k, m)
    if sum(k) != sum(m):
        return False
    sk = sm = 0
    for a, b in zip(k, m):
        sk += a
        sm += b
        if sk > sm:
            return False
    return True


def includes(k, m) -> bool:
    """k is contained in m componentwise."""
    _same_r(k, m)
    return all(a <= b for a, b in zip(k, m))


def add_boxes(m, J, sign=+1):
    """m + sign*eps_J, or None when the result is not a partition.

    J holds 1-based indices.
    """
    r = len(m)
    out = list(m)
    for j in J:
        if not 1 <= j <= r:
            raise IndexError(f"index {j} out of range 1..{r}")
        out[j - 1] += sign
    out = tuple(out)
    return out if is_partition(out) else None


def shift_vector(x, J, sign=+1):
    """x + sign*eps_J for an arbitrary vector (no partition check)."""
    out = list(x)
    for j in J:
        out[j - 1] = out[j - 1] + sign
    return tuple(out)


def staircase(r: int) -> tuple:
    return tuple(range(r - 1, -1, -1))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, r: int) -> tuple:
    """All partitions of n with at most r parts, lex-descending."""
    if n < 0:
        raise ValueError("weight must be nonnegative")

    def rec(n, r, cap):
        if r == 0:
            if n == 0:
                yield ()
            return
        for first in range(min(n, cap), -1, -1):
            if first * r < n:
                break
            for rest in rec(n - first, r - 1, first):
                yield (first,) + rest

    return tuple(rec(n, r, n))


def partitions_upto(N: int, r: int):
    out = []
    for n in range(N + 1):
        out.extend(enumerate_partitions(n, r))
    return out


def partitions_in_box(height: int, r: int):
    """Partitions with all parts <= height (x_1 <= height)."""
    return [m for m in partitions_upto(height * r, r) if not m or m[0] <= height]


def subsets(r: int, size=None):
    """Subsets of [r] (1-based tuples), by size then lexicographically."""
    sizes = range(r + 1) if size is None else [size]
    for s in sizes:
        yield from combinations(range(1, r + 1), s)


@lru_cache(maxsize=None)
def orbit(k) -> tuple:
    return tuple(sorted(set(permutations(k)), reverse=True))


def orbit_size(k) -> int:
    out = factorial(len(k))
    counts = {}
    for v in k:
        counts[v] = counts.get(v, 0) + 1
    for c in counts.values():
        out //= factorial(c)
    return out


class SymPoly:
    """Symmetric polynomial sum_k c_k m_k(z) in r variables."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs=None):
        self.r = r
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                k = normalize(k, r)
                if v:
                    self.coeffs[k] = v

    @classmethod
    def _raw(cls, r, coeffs):
        p = object.__new__(cls)
        p.r = r
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, r, c):
        return cls._raw(r, {(0,) * r: c} if c else {})

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw(len(k), {tuple(k): c} if c else {})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs.get(tuple(k), 0)

    def degree(self):
        return max((sum(k) for k in self.coeffs), default=-1)

    def _other(self, other):
        if not isinstance(other, SymPoly):
            return SymPoly.const(self.r, other)
        if other.r != self.r:
            raise ArityMismatch(f"arity {self.r} vs {other.r}")
        return other

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.r == other.r and (self - other).is_zero()

    def __neg__(self):
        return SymPoly._raw(self.r, {k: -v for k, v in self.coeffs.items()})

    def __add__(self, other):
        other = self._other(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            if k in out:
                s = out[k] + v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v
        return SymPoly._raw(self.r, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def scale(self, c):
        if not c:
            return SymPoly._raw(self.r, {})
        if c == 1:
            return self
        return SymPoly._raw(self.r, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return sym_collect(sym_expand(self) * sym_expand(self._other(other)))
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(mpq(1) / c)

    def homogeneous_part(self, n):
        return SymPoly._raw(self.r, {k: v for k, v in self.coeffs.items() if sum(k) == n})

    def truncate(self, N):
        return SymPoly._raw(self.r, {k: v for k, v in self.coeffs.items() if sum(k) <= N})

    def map_coeffs(self, fn):
        out = {}
        for k, v in self.coeffs.items():
            w = fn(v)
            if w:
                out[k] = w
        return SymPoly._raw(self.r, out)

    def eval(self, point):
        return sym_eval(self, point)

    def sorted_terms(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __repr__(self):
        return f"SymPoly({self.r}, {format_sympoly(self)!r})"

    def __str__(self):
        return format_sympoly(self)


def sym_expand(f: SymPoly) -> MPoly:
    terms = {}
    for k, v in f.coeffs.items():
        for n in orbit(k):
            terms[n] = v
    return MPoly._raw(f.r, terms)


def sym_collect(g: MPoly) -> SymPoly:
    """Inverse of sym_expand; raises NotSymmetric when g is not symmetric."""
    out = {}
    seen = {}
    for n, v in g.terms.items():
        k = tuple(sorted(n, reverse=True))
        if k in out:
            if out[k] != v:
                raise NotSymmetric(f"coefficient of {format_monomial(n)} differs within its orbit")
            seen[k] += 1
        else:
            out[k] = v
            seen[k] = 1
    for k, cnt in seen.items():
        if cnt != orbit_size(k):
            raise NotSymmetric(f"orbit of {k} only partially present")
    return SymPoly._raw(g.r, out)


def sym_eval(f: SymPoly, point):
    if len(point) != f.r:
        raise ArityMismatch(f"point of length {len(point)} for arity {f.r}")
    maxdeg = max((k[0] for k in f.coeffs), default=0)
    powers = []
    for x in point:
        row = [1, x]
        for _ in range(maxdeg - 1):
            row.append(row[-1] * x)
        powers.append(row)
    acc = 0
    for k, v in f.coeffs.items():
        s = 0
        for n in orbit(k):
            t = 1
            for i, e in enumerate(n):
                if e:
                    t = t * powers[i][e]
            s = s + t
        acc = acc + v * s
    return acc


def shifted_point(x, d):
    """(x_i + (d/2)(r-i))_i."""
    r = len(x)
    return tuple(xi + d * (r - i) / 2 for i, xi in enumerate(x, 1))


def eval_shifted(f: SymPoly, x, d):
    return sym_eval(f, shifted_point(x, d))


def elementary_e(r: int, k: int, one=1) -> SymPoly:
    if not 0 <= k <= r:
        raise IndexError(f"e_{{{r},{k}}} undefined")
    return SymPoly.monomial((1,) * k + (0,) * (r - k), one)


def power_sum_1(r: int, one=1) -> SymPoly:
    return SymPoly.monomial((1,) + (0,) * (r - 1), one)


def format_sympoly(f: SymPoly) -> str:
    if f.is_zero():
        return "0"
    text = ""
    for k, v in f.sorted_terms():
        neg, c = coeff_parts(v)
        mono = f"m[{format_partition(k)}]"
        body = mono if c == "1" else f"{c}*{mono}"
        if not text:
            text = ("-" if neg else "") + body
        else:
            text += (" - " if neg else " + ") + body
    return text

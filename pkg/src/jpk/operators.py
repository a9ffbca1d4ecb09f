"""Differential operators acting on symmetric polynomials.

All operators take the Jack parameter ``d`` explicitly (a ``DRat`` or a
rational) and act on ``SymPoly`` values by expanding to ``MPoly``, acting,
and re-collecting into the monomial basis.  Re-collection raises
``NotSymmetric`` if an operator ever produced a non-symmetric result.

A u-polynomial result is a list ``[c_0, ..., c_r]`` where ``c_p`` is the
coefficient of ``u^(r-p)``.
"""
from __future__ import annotations

import logging
import threading
from itertools import combinations
from math import comb, factorial

from gmpy2 import mpq

from .partitions import SymPoly, sym_collect, sym_expand
from .polyring import MPoly, vandermonde

log = logging.getLogger(__name__)

_VANDERMONDE = {}
_FACTOR_CACHE = {}
_lock = threading.Lock()


def _vdm(r):
    v = _VANDERMONDE.get(r)
    if v is None:
        v = _VANDERMONDE.setdefault(r, vandermonde(r))
    return v


def elementary_values(vals):
    """[e_0, e_1, ..., e_n] of a list of scalars."""
    es = [1] + [0] * len(vals)
    for k, v in enumerate(vals, 1):
        for p in range(k, 0, -1):
            es[p] = es[p] + v * es[p - 1]
    return es


# ---------------------------------------------------------------------------
# first-order pieces
# ---------------------------------------------------------------------------


def euler(f: SymPoly) -> SymPoly:
    """sum_i z_i d/dz_i, i.e. multiply each homogeneous part by its degree."""
    return SymPoly._raw(f.r, {k: v * sum(k) for k, v in f.coeffs.items() if sum(k)})


def dsum(f: SymPoly) -> SymPoly:
    """|d_z| f = sum_j df/dz_j."""
    F = sym_expand(f)
    out = MPoly._raw(f.r, {})
    for j in range(1, f.r + 1):
        out = out + F.diff(j)
    return sym_collect(out)


def zmul(f: SymPoly) -> SymPoly:
    """|z| f = (z_1 + ... + z_r) f."""
    r = f.r
    out = {}
    for n, v in sym_expand(f).terms.items():
        for i in range(r):
            k = n[:i] + (n[i] + 1,) + n[i + 1:]
            out[k] = out.get(k, 0) + v
    return sym_collect(MPoly._raw(r, {k: v for k, v in out.items() if v}))


# ---------------------------------------------------------------------------
# D(z)
# ---------------------------------------------------------------------------


def apply_D(f: SymPoly, d) -> SymPoly:
    r = f.r
    F = sym_expand(f)
    second = MPoly._raw(r, {})
    first = []
    for j in range(1, r + 1):
        dj = F.diff(j)
        second = second + _zsq(dj.diff(j), j)
        first.append(_zsq(dj, j))
    cross = MPoly._raw(r, {})
    for j, l in combinations(range(1, r + 1), 2):
        num = first[j - 1] - first[l - 1]
        cross = cross + num.exact_div(MPoly.var(r, j) - MPoly.var(r, l))
    return sym_collect(second + cross.scale(d))


def _zsq(g: MPoly, j: int) -> MPoly:
    i = j - 1
    return MPoly._raw(g.r, {k[:i] + (k[i] + 2,) + k[i + 1:]: v for k, v in g.terms.items()})


def jack_eigenvalue(m, d):
    """sum_j m_j (m_j - 1 + d (r - j))."""
    r = len(m)
    return sum((mj * (mj - 1 + d * (r - j)) for j, mj in enumerate(m, 1)), 0)


# ---------------------------------------------------------------------------
# Sekiguchi operators
# ---------------------------------------------------------------------------


def _pair_factor(a, b, alpha):
    """Coefficients of prod_i (u + a_i + alpha*b_i), p-indexed."""
    key = (a, b, alpha)
    hit = _FACTOR_CACHE.get(key)
    if hit is None:
        hit = elementary_values([ai + alpha * bi for ai, bi in zip(a, b)])
        with _lock:
            _FACTOR_CACHE[key] = hit
    return hit


def apply_S(f: SymPoly, d) -> list:
    """S_r(u; z) f as [H_{r,0} f, ..., H_{r,r} f].

    (prod_{i in I} z_i d_i) Delta * (prod_{j in J} z_j d_j) f, summed over
    disjoint I, J with weight (2/d)^|J|, pairs a monomial z^a of Delta with a
    monomial z^b of f into prod_{i in I} a_i prod_{j in J} (2/d) b_j z^(a+b).
    Summing over I, J gives e_p(a + (2/d) b), so the whole family is one
    pass over monomial pairs followed by one exact division by Delta.
    """
    r = f.r
    if f.is_zero():
        return [SymPoly._raw(r, {}) for _ in range(r + 1)]
    alpha = mpq(2) / d
    V = _vdm(r)
    F = sym_expand(f)
    acc = [{} for _ in range(r + 1)]
    for a, ca in V.terms.items():
        for b, cb in F.terms.items():
            es = _pair_factor(a, b, alpha)
            c = cb if ca == 1 else -cb
            key = tuple(x + y for x, y in zip(a, b))
            for p in range(r + 1):
                e = es[p]
                if e:
                    slot = acc[p]
                    slot[key] = slot.get(key, 0) + c * e
    out = []
    for p in range(r + 1):
        num = MPoly._raw(r, {k: v for k, v in acc[p].items() if v})
        out.append(sym_collect(num.exact_div(V)))
    return out


def apply_H(p: int, f: SymPoly, d) -> SymPoly:
    if not 0 <= p <= f.r:
        raise IndexError(f"H_{{{f.r},{p}}} undefined")
    if p == 0:
        return f
    return apply_S(f, d)[p]


def apply_H_literal(p: int, f: SymPoly, d, trace=None) -> SymPoly:
    """H_{r,p} f straight from the (l, I, J) triple sum.

    Used as an independent check on ``apply_S``.  ``trace``, if given, is
    called with one line per (l, I, J) term.
    """
    r = f.r
    if not 0 <= p <= r:
        raise IndexError(f"H_{{{r},{p}}} undefined")
    alpha = mpq(2) / d
    V = _vdm(r)
    F = sym_expand(f)
    total = MPoly._raw(r, {})
    idx = range(1, r + 1)
    for l in range(p + 1):
        pref = alpha ** (p - l)
        for I in combinations(idx, l):
            dV = V
            for i in I:
                dV = dV.euler_component(i)
            if dV.is_zero():
                continue
            rest = [j for j in idx if j not in I]
            for J in combinations(rest, p - l):
                g = F
                for j in J:
                    g = g.euler_component(j)
                term = (dV * g).scale(pref)
                if trace is not None:
                    trace(f"l={l} I={set(I) or '{}'} J={set(J) or '{}'} "
                          f"prefactor=(2/d)^{p - l} degree={term.degree()}")
                total = total + term
    return sym_collect(total.exact_div(V))


# ---------------------------------------------------------------------------
# twisted operators
# ---------------------------------------------------------------------------


def _ad_power(l, f, d, X):
    """(ad X)^l S applied to f, via sum_j (-1)^j C(l,j) X^(l-j) S X^j."""
    r = f.r
    out = [SymPoly._raw(r, {}) for _ in range(r + 1)]
    Xf = f
    for j in range(l + 1):
        if j:
            Xf = X(Xf)
        if Xf.is_zero():
            break
        slots = apply_S(Xf, d)
        coef = (-1) ** j * comb(l, j)
        for p in range(r + 1):
            g = slots[p]
            for _ in range(l - j):
                if g.is_zero():
                    break
                g = X(g)
            out[p] = out[p] + g.scale(coef)
    return out


def twisted_falling(l: int, f: SymPoly, d) -> list:
    """[(ad |d_z|)^l / l!] S_r(u; z) applied to f."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    res = _ad_power(l, f, d, dsum)
    inv = mpq(1, factorial(l))
    return [g.scale(inv) for g in res]


def twisted_raising(l: int, f: SymPoly, d) -> list:
    """[(-ad |z|)^l / l!] S_r(u; z) applied to f."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    res = _ad_power(l, f, d, zmul)
    s = mpq((-1) ** l, factorial(l))
    return [g.scale(s) for g in res]


# ---------------------------------------------------------------------------
# u-polynomials
# ---------------------------------------------------------------------------


def upoly_zero(r):
    return [0] * (r + 1)


def upoly_is_zero(u) -> bool:
    return all(not c for c in u)


def upoly_scale_sym(coeffs, f: SymPoly) -> list:
    """Scalar u-polynomial times a SymPoly, slotwise."""
    return [f.scale(c) for c in coeffs]


def upoly_sym_sub(a: list, b: list) -> list:
    return [x - y for x, y in zip(a, b)]

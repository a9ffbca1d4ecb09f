"""Interpolation (shifted) Jack polynomials and their identities.

P^ip_m is built from its vanishing characterization.  Writing
P^ip_m = P_m - sum_n b_n P^ip_n over |n| < |m| and imposing vanishing at
n + (d/2) delta in order of increasing weight gives a system that is
triangular for the inclusion order, so each b_n is one division.  Every
result is then checked against all vanishing conditions of weight <= |m|.
A dense solve in the monomial basis is kept for cross-checking.
"""
from __future__ import annotations

import threading

from .jack import (
    JackTable,
    coeff_A,
    coeff_I,
    eigen_I,
    jack_table,
    staircase_factor,
)
from .partitions import (
    SymPoly,
    add_boxes,
    enumerate_partitions,
    includes,
    is_partition,
    normalize,
    partitions_in_box,
    partitions_upto,
    shift_vector,
    shifted_point,
    subsets,
    sym_eval,
)
from .report import VerdictReport, compare_scalar_slots
from .scalars import SYMBOLIC, PoleAtSpecialization


class SingularVanishingSystem(ArithmeticError):
    pass


class IJackTable:
    def __init__(self, jack: JackTable):
        self.jack = jack
        self.r = jack.r
        self.field = jack.field
        self.d = jack.d
        self._ip = {}
        self._vals = {}
        self._lock = threading.RLock()

    def _store(self, cache, key, value):
        with self._lock:
            return cache.setdefault(key, value)

    def point(self, x):
        return shifted_point(tuple(self.field(v) if isinstance(v, str) else v for v in x), self.d)

    def ip(self, m) -> SymPoly:
        m = normalize(m, self.r)
        hit = self._ip.get(m)
        if hit is None:
            hit = self._store(self._ip, m, self._build(m))
        return hit

    def eval_shift(self, k, x):
        """P^ip_k(x + (d/2) delta), cached."""
        k = normalize(k, self.r)
        key = (k, tuple(x))
        hit = self._vals.get(key)
        if hit is None:
            hit = self._store(self._vals, key, sym_eval(self.ip(k), self.point(x)))
        return hit

    def norm(self, m):
        return self.eval_shift(m, m)

    def _build(self, m):
        one = self.field.one
        if not any(m):
            return SymPoly.const(self.r, one)
        P = self.jack.P(m)
        lower = partitions_upto(sum(m) - 1, self.r)
        b = {}
        for n in lower:
            val = sym_eval(P, self.point(n))
            for n2, c in b.items():
                if includes(n2, n):
                    val = val - c * self.eval_shift(n2, n)
            piv = self.eval_shift(n, n)
            if not piv:
                if self.field.symbolic:
                    raise SingularVanishingSystem(f"P^ip_{n} vanishes at its own point")
                raise PoleAtSpecialization(f"P^ip_{n}({n}) vanishes at {self.field.key}")
            if val:
                b[n] = val / piv
        out = P
        for n, c in b.items():
            out = out - self.ip(n).scale(c)
        self._validate(m, out)
        return out

    def _validate(self, m, f):
        for w in range(sum(m) + 1):
            for n in enumerate_partitions(w, self.r):
                if n != m and sym_eval(f, self.point(n)):
                    raise SingularVanishingSystem(
                        f"P^ip_{m} does not vanish at {n} + (d/2) delta")

    def binom_coeff(self, k, x):
        n = self.norm(k)
        if not n:
            from .jack import ZeroNormalization

            raise ZeroNormalization(f"P^ip_{k}({k}) vanishes")
        return self.eval_shift(k, x) / n

    def snapshot(self) -> dict:
        return dict(self._ip)

    def restore(self, ip: dict):
        with self._lock:
            self._ip.update(ip)


def ijack_table(r: int, field=SYMBOLIC) -> IJackTable:
    return jack_table(r, field).interp()


def ijack_P(m, field=SYMBOLIC) -> SymPoly:
    return ijack_table(len(m), field).ip(m)


def ijack_eval_shift(k, x, field=SYMBOLIC):
    return ijack_table(len(k), field).eval_shift(k, tuple(x))


def binom_coeff(k, x, field=SYMBOLIC):
    return ijack_table(len(k), field).binom_coeff(k, tuple(x))


def ijack_P_dense(m, field=SYMBOLIC) -> SymPoly:
    """P^ip_m from a dense solve in the monomial basis (cross-check path).

    Unknowns are the coefficients of m_k, |k| < |m|; equations are vanishing
    at n + (d/2) delta for |n| < |m|.
    """
    r = len(m)
    m = normalize(m, r)
    table = jack_table(r, field)
    P = table.P(m)
    basis = partitions_upto(sum(m) - 1, r)
    if not basis:
        return P
    one = field.one
    rows = []
    for n in basis:
        pt = shifted_point(n, field.d)
        row = [sym_eval(SymPoly.monomial(k, one), pt) for k in basis]
        row.append(-sym_eval(P, pt))
        rows.append(row)
    sol = solve_dense(rows)
    out = P
    for k, c in zip(basis, sol):
        out = out + SymPoly.monomial(k, c)
    return out


def solve_dense(rows):
    """Gauss-Jordan elimination on an augmented square system over a field."""
    n = len(rows)
    a = [list(r) for r in rows]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise SingularVanishingSystem(f"no pivot in column {col}")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [vi - f * vc for vi, vc in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def difference_operator(g, x, r, d, report=None):
    """D^ip_r(u; x) applied to the function g, as a p-indexed list.

    Terms with x - eps_J outside the partition cone must carry a zero
    coefficient; this is checked (into ``report``) rather than assumed.
    """
    out = [0] * (r + 1)
    for J in subsets(r):
        c = coeff_A(-1, J, x, d) * staircase_factor(J, x, d)
        y = shift_vector(x, J, -1)
        if not is_partition(y) and report is not None:
            report.require(not c, form="support", x=x, J=J)
        if not c:
            continue
        gy = g(y)
        if not gy:
            continue
        sign = -1 if len(J) % 2 else 1
        for p, ci in enumerate(coeff_I(J, x, d)):
            if ci:
                out[p] = out[p] + sign * ci * c * gy
    return out


def verify_difference_eq(k, box_height, table: IJackTable) -> VerdictReport:
    r, d = table.r, table.d
    k = normalize(k, r)
    rep = VerdictReport("ijack-difference", {"r": r, "k": k, "box": box_height,
                                             "d": table.field.key})
    Ik = eigen_I(k, d)

    def g(y):
        return table.eval_shift(k, y)

    for x in partitions_in_box(box_height, r):
        lhs = difference_operator(g, x, r, d, rep)
        gx = g(x)
        rhs = [c * gx for c in Ik]
        compare_scalar_slots(rep, lhs, rhs, x=x)
    return rep


def verify_ijack_pieri(k, box_height, table: IJackTable) -> VerdictReport:
    r, d = table.r, table.d
    k = normalize(k, r)
    jt = table.jack
    rep = VerdictReport("ijack-pieri", {"r": r, "k": k, "box": box_height,
                                        "d": table.field.key})
    moves = []
    for J in subsets(r):
        kJ = add_boxes(k, J, +1)
        if kJ is None:
            rep.require(not coeff_A(+1, J, k, d), form="A+ off cone", J=J)
            continue
        moves.append((kJ, coeff_I(J, k, d), coeff_A(+1, J, k, d) / jt.P_one(kJ)))
    one_k = jt.P_one(k)
    for x in partitions_in_box(box_height, r):
        gx = table.eval_shift(k, x) / one_k
        lhs = [c * gx for c in eigen_I(x, d)]
        rhs = [0] * (r + 1)
        for kJ, IJ, a in moves:
            v = table.eval_shift(kJ, x)
            if not v:
                continue
            for p, c in enumerate(IJ):
                rhs[p] = rhs[p] + c * a * v
        compare_scalar_slots(rep, lhs, rhs, x=x)
    return rep


def verify_vanishing(m, extra, table: IJackTable) -> VerdictReport:
    """P^ip_m vanishes at n + (d/2) delta for every n of weight <= |m| + extra
    with m not contained in n."""
    r = table.r
    m = normalize(m, r)
    rep = VerdictReport("ijack-vanishing", {"r": r, "m": m, "extra": extra,
                                            "d": table.field.key})
    for n in partitions_upto(sum(m) + extra, r):
        if not includes(m, n):
            rep.require(not table.eval_shift(m, n), n=n)
    rep.require(bool(table.norm(m)), form="normalization nonzero")
    top = table.ip(m).homogeneous_part(sum(m))
    rep.require((top - table.jack.P(m)).is_zero(), form="top component")
    return rep

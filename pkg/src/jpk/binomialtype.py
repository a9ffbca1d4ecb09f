"""Truncated 0F0 kernel, binomial-type families and their identities.

All series are formal and truncated at an explicit total degree N.  A
symmetric series in u is a dict partition -> scalar in the monomial basis;
a series with coefficients in z maps u-partitions to SymPoly values in z.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from gmpy2 import mpq

from .jack import JackTable, coeff_A, jack_table, staircase_factor
from .operators import twisted_falling
from .partitions import (
    SymPoly,
    add_boxes,
    elementary_e,
    enumerate_partitions,
    includes,
    normalize,
    partitions_upto,
    power_sum_1,
    subsets,
    sym_collect,
    sym_expand,
)
from .report import VerdictReport
from .scalars import SYMBOLIC


@dataclass
class KernelTrunc:
    """sum_{|m| <= N} Phi_m(z) Psi_m(u), keyed by the Psi(u) index m."""

    r: int
    N: int
    terms: dict = field(default_factory=dict)


@dataclass
class SeriesF:
    """Truncated symmetric series F(u) in the monomial basis."""

    r: int
    N: int
    coeffs: dict = field(default_factory=dict)
    name: str = "F"

    @classmethod
    def one(cls, r, N, fld=SYMBOLIC):
        return cls(r, N, {(0,) * r: fld.one}, name="1")

    @classmethod
    def from_p1(cls, r, N, a, fld=SYMBOLIC, name="F"):
        """sum_n a[n] p_1(u)^n, truncated at N."""
        out = SymPoly._raw(r, {})
        p1 = power_sum_1(r, fld.one)
        pw = SymPoly.const(r, fld.one)
        for n in range(N + 1):
            if n:
                pw = pw * p1
            if n < len(a) and a[n]:
                out = out + pw.scale(fld(a[n]))
        return cls(r, N, dict(out.coeffs), name=name)

    def as_sympoly(self):
        return SymPoly._raw(self.r, dict(self.coeffs))


def bernoulli_numbers(N: int):
    """B_0..B_N from inverting (e^t - 1)/t = sum t^j/(j+1)! term by term."""
    E = [mpq(1, factorial(j + 1)) for j in range(N + 1)]
    b = [mpq(1)]
    for n in range(1, N + 1):
        b.append(-sum((E[j] * b[n - j] for j in range(1, n + 1)), mpq(0)))
    return [b[n] * factorial(n) for n in range(N + 1)]


def bernoulli_series(r: int, N: int, fld=SYMBOLIC) -> SeriesF:
    """|u| / (e^|u| - 1) = sum_n B_n p_1(u)^n / n!."""
    B = bernoulli_numbers(N)
    return SeriesF.from_p1(r, N, [B[n] / factorial(n) for n in range(N + 1)], fld,
                           name="bernoulli")


def _mul_trunc(f: SymPoly, g: SymPoly, N: int) -> SymPoly:
    F, G = sym_expand(f), sym_expand(g)
    out = {}
    for a, ca in F.terms.items():
        sa = sum(a)
        for b, cb in G.terms.items():
            if sa + sum(b) > N:
                continue
            k = tuple(x + y for x, y in zip(a, b))
            out[k] = out.get(k, 0) + ca * cb
    from .polyring import MPoly

    return sym_collect(MPoly._raw(f.r, {k: v for k, v in out.items() if v}))


def kernel_0F0(r: int, N: int, fld=SYMBOLIC) -> KernelTrunc:
    t = jack_table(r, fld)
    return KernelTrunc(r, N, {m: t.Phi(m) for m in partitions_upto(N, r)})


def kernel_bigraded(r, N, table: JackTable, swap=False) -> dict:
    """Kernel as {(z-partition, u-partition): scalar} in the m(z) x m(u) basis.

    ``swap`` builds sum Psi_m(z) Phi_m(u) instead.
    """
    out = {}
    for m in partitions_upto(N, r):
        zf, uf = table.Phi(m), table.Psi(m)
        if swap:
            zf, uf = uf, zf
        for a, ca in zf.coeffs.items():
            for b, cb in uf.coeffs.items():
                key = (a, b)
                out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def expand_in_psi(series: dict, N: int, table: JackTable) -> dict:
    """Re-expand sum_lambda G_lambda(z) m_lambda(u) as sum_x f_x(z) Psi_x(u).

    Peels off the lex-largest monomial of each weight with the unitriangular
    Jack polynomial P_x, then rescales P_x = P^ip_x(x + d delta/2) Psi_x.
    """
    r = table.r
    work = {k: v for k, v in series.items() if sum(k) <= N and not v.is_zero()}
    out = {}
    for n in range(N + 1):
        for x in enumerate_partitions(n, r):
            g = work.pop(x, None)
            if g is None or g.is_zero():
                continue
            for k, c in table.P(x).coeffs.items():
                if k == x:
                    continue
                rest = work.get(k, SymPoly._raw(r, {})) - g.scale(c)
                work[k] = rest
            out[x] = g.scale(table.ip_norm(x))
    leftover = [k for k, v in work.items() if not v.is_zero()]
    assert not leftover, f"unreduced terms {leftover}"
    return out


def binomial_family(F: SeriesF, N: int, table: JackTable) -> dict:
    """{m: f_m(z)} for |m| <= N with 0F0(z,u) F(u) = sum f_m(z) Psi_m(u)."""
    if F.N < N:
        raise ValueError(f"series truncated at {F.N} < {N}")
    r = table.r
    Fu = F.as_sympoly().truncate(N)
    series = {}
    for m in partitions_upto(N, r):
        prod = _mul_trunc(table.Psi(m), Fu, N)
        phi = table.Phi(m)
        for lam, c in prod.coeffs.items():
            series[lam] = series.get(lam, SymPoly._raw(r, {})) + phi.scale(c)
    fam = expand_in_psi(series, N, table)
    zero = SymPoly._raw(r, {})
    return {m: fam.get(m, zero) for m in partitions_upto(N, r)}


def bernoulli_poly(m, fld=SYMBOLIC) -> SymPoly:
    r = len(m)
    N = sum(m)
    fam = binomial_family(bernoulli_series(r, N, fld), N, jack_table(r, fld))
    return fam[normalize(m, r)]


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def _exp_p1_times(f: SymPoly, N: int, one) -> SymPoly:
    """e^{|z|} f truncated at total degree N."""
    r = f.r
    p1 = power_sum_1(r, one)
    out = SymPoly._raw(r, {})
    term = f.truncate(N)
    j = 0
    while not term.is_zero():
        out = out + term.scale(mpq(1, factorial(j)))
        j += 1
        term = _mul_trunc(term, p1, N)
    return out


def verify_exp_binomial(k, N, table: JackTable) -> VerdictReport:
    r = table.r
    k = normalize(k, r)
    one = table.field.one
    it = table.interp()
    rep = VerdictReport("exp-binomial", {"r": r, "k": k, "N": N, "d": table.field.key})
    above = [x for x in partitions_upto(N, r) if includes(k, x)]
    lhs = _exp_p1_times(table.Phi(k), N, one)
    rhs = SymPoly._raw(r, {})
    for x in above:
        rhs = rhs + table.Psi(x).scale(it.eval_shift(k, x) / table.P_one(k))
    rep.require((lhs - rhs).is_zero(), form="Phi")
    lhs = _exp_p1_times(table.Psi(k), N, one)
    rhs = SymPoly._raw(r, {})
    for x in above:
        rhs = rhs + table.Psi(x).scale(it.binom_coeff(k, x))
    rep.require((lhs - rhs).is_zero(), form="Psi")
    return rep


def _bigraded_add(acc, zf: SymPoly, uf: SymPoly, scale=1):
    for a, ca in zf.coeffs.items():
        for b, cb in uf.coeffs.items():
            key = (a, b)
            acc[key] = acc.get(key, 0) + ca * cb * scale


def verify_intertwine(l, N, table: JackTable) -> VerdictReport:
    """(d/2)^l [(ad|d_z|)^l/l! H_{r,l}] 0F0 = 0F0 e_{r,l}(u), compared
    coefficientwise for u-degree <= N (z-degree <= N - l)."""
    r, d = table.r, table.d
    rep = VerdictReport("kernel-intertwine", {"r": r, "l": l, "N": N, "d": table.field.key})
    pref = (d / 2) ** l
    lhs, rhs = {}, {}
    el = elementary_e(r, l, table.field.one)
    for m in partitions_upto(N, r):
        op = twisted_falling(l, table.Phi(m), d)[l]
        _bigraded_add(lhs, op, table.Psi(m), pref)
        if sum(m) + l <= N:
            _bigraded_add(rhs, table.Phi(m), el * table.Psi(m))
    for key in sorted(set(lhs) | set(rhs)):
        if sum(key[1]) > N:
            continue
        rep.require(lhs.get(key, 0) == rhs.get(key, 0), z=key[0], u=key[1])
    return rep


def verify_kernel_symmetry(N, table: JackTable) -> VerdictReport:
    rep = VerdictReport("kernel-symmetry", {"r": table.r, "N": N, "d": table.field.key})
    a = kernel_bigraded(table.r, N, table)
    b = kernel_bigraded(table.r, N, table, swap=True)
    for key in sorted(set(a) | set(b)):
        rep.require(a.get(key, 0) == b.get(key, 0), z=key[0], u=key[1])
    return rep


def verify_psi_pieri(m, l, table: JackTable) -> VerdictReport:
    r, d = table.r, table.d
    m = normalize(m, r)
    rep = VerdictReport("psi-pieri", {"r": r, "m": m, "l": l, "d": table.field.key})
    lhs = elementary_e(r, l, table.field.one) * table.Psi(m)
    rhs = SymPoly._raw(r, {})
    for J in subsets(r, l):
        mJ = add_boxes(m, J, +1)
        if mJ is None:
            continue
        c = coeff_A(-1, J, mJ, d) * staircase_factor(J, m, d, shift=1)
        rhs = rhs + table.Psi(mJ).scale(c)
    rep.require((lhs - rhs).is_zero())
    return rep


def verify_binomial_shift(F: SeriesF, m, family: dict, table: JackTable) -> VerdictReport:
    r = table.r
    m = normalize(m, r)
    it = table.interp()
    rep = VerdictReport("binomial-shift", {"r": r, "F": F.name, "m": m, "d": table.field.key})
    lhs = sym_collect(sym_expand(family[m]).shift_ones())
    rhs = SymPoly._raw(r, {})
    for k in partitions_upto(sum(m), r):
        if includes(k, m):
            rhs = rhs + family[k].scale(it.binom_coeff(k, m))
    rep.require((lhs - rhs).is_zero())
    return rep


def verify_twisted_pieri_binomial(F: SeriesF, m, l, family: dict,
                                  table: JackTable) -> VerdictReport:
    r, d = table.r, table.d
    m = normalize(m, r)
    rep = VerdictReport("binomial-twisted", {"r": r, "F": F.name, "m": m, "l": l,
                                             "d": table.field.key})
    lhs = twisted_falling(l, family[m], d)[l].scale((d / 2) ** l)
    rhs = SymPoly._raw(r, {})
    for J in subsets(r, l):
        mJ = add_boxes(m, J, -1)
        if mJ is None:
            continue
        c = coeff_A(-1, J, m, d) * staircase_factor(J, m, d)
        rhs = rhs + family[mJ].scale(c)
    rep.require((lhs - rhs).is_zero())
    return rep

"""Jack polynomials, their normalizations, Pieri coefficients and checkers.

P_m is obtained by a triangular eigen-solve against D(z) in the monomial
basis.  Tables are memoized per (r, field) and are safe to share between
threads: a missing entry may be computed twice, but the stored value is
written once under a lock.
"""
from __future__ import annotations

import random
import threading

from gmpy2 import mpq

from .operators import (
    apply_D,
    apply_S,
    dsum,
    elementary_values,
    jack_eigenvalue,
    twisted_falling,
    twisted_raising,
    zmul,
)
from .partitions import (
    SymPoly,
    add_boxes,
    dominance_leq,
    elementary_e,
    enumerate_partitions,
    is_partition,
    normalize,
    orbit_size,
    shift_vector,
    subsets,
)
from .report import VerdictReport, compare_slots
from .scalars import SYMBOLIC, PoleAtSpecialization


class DegenerateDiagonal(ArithmeticError):
    pass


class PoleInCoefficient(ArithmeticError):
    pass


class ZeroNormalization(ArithmeticError):
    pass


class JackTable:
    """Memo table of P_m, P_m(1) and the D-matrix rows for fixed r and field."""

    def __init__(self, r: int, field=SYMBOLIC):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.field = field
        self.d = field.d
        self._P = {}
        self._ones = {}
        self._Drow = {}
        self._S = {}
        self._interp = None
        self._lock = threading.RLock()

    def _store(self, cache, key, value):
        with self._lock:
            return cache.setdefault(key, value)

    def D_row(self, k):
        """D(z) m_k in the monomial basis."""
        hit = self._Drow.get(k)
        if hit is None:
            hit = self._store(self._Drow, k, apply_D(SymPoly.monomial(k, self.field.one), self.d))
        return hit

    def P(self, m) -> SymPoly:
        m = normalize(m, self.r)
        hit = self._P.get(m)
        if hit is None:
            hit = self._store(self._P, m, self._solve(m))
        return hit

    def _solve(self, m):
        d = self.d
        one = self.field.one
        below = [k for k in enumerate_partitions(sum(m), self.r) if dominance_leq(k, m)]
        ev_m = jack_eigenvalue(m, d)
        coeffs = {m: one}
        for j in below[1:]:
            rhs = 0
            for k, ck in coeffs.items():
                rhs = rhs + ck * self.D_row(k)[j]
            diag = ev_m - jack_eigenvalue(j, d)
            if self.D_row(j)[j] != jack_eigenvalue(j, d):
                raise DegenerateDiagonal(f"D is not triangular at {j}")
            if not diag:
                if self.field.symbolic:
                    raise DegenerateDiagonal(f"eigenvalues of {m} and {j} coincide")
                raise PoleAtSpecialization(
                    f"eigenvalue gap between {m} and {j} vanishes at {self.field.key}")
            cj = rhs / diag
            if cj:
                coeffs[j] = cj
        return SymPoly._raw(self.r, coeffs)

    def P_one(self, m):
        """P_m(1, ..., 1)."""
        m = normalize(m, self.r)
        hit = self._ones.get(m)
        if hit is None:
            total = 0
            for k, c in self.P(m).coeffs.items():
                total = total + c * orbit_size(k)
            hit = self._store(self._ones, m, total)
        return hit

    def interp(self):
        if self._interp is None:
            from .interpolation import IJackTable

            with self._lock:
                if self._interp is None:
                    self._interp = IJackTable(self)
        return self._interp

    def ip_norm(self, m):
        """P^ip_m(m + (d/2) delta)."""
        return self.interp().norm(normalize(m, self.r))

    def Phi(self, m) -> SymPoly:
        n = self.P_one(m)
        if not n:
            raise ZeroNormalization(f"P_{m}(1) vanishes")
        return self.P(m).scale(self.field.one / n)

    def Psi(self, m) -> SymPoly:
        n = self.ip_norm(m)
        if not n:
            raise ZeroNormalization(f"P^ip_{m}(m + d delta/2) vanishes")
        return self.P(m).scale(self.field.one / n)

    def S_image(self, m):
        """S_r(u; z) P_m, memoized."""
        m = normalize(m, self.r)
        hit = self._S.get(m)
        if hit is None:
            hit = self._store(self._S, m, apply_S(self.P(m), self.d))
        return hit

    def snapshot(self) -> dict:
        return {"P": dict(self._P), "ones": dict(self._ones)}

    def restore(self, P: dict):
        with self._lock:
            self._P.update(P)


_TABLES = {}
_TABLES_LOCK = threading.Lock()


def jack_table(r: int, field=SYMBOLIC) -> JackTable:
    key = (r, field.key)
    with _TABLES_LOCK:
        t = _TABLES.get(key)
        if t is None:
            t = _TABLES[key] = JackTable(r, field)
    return t


def clear_tables():
    with _TABLES_LOCK:
        _TABLES.clear()


def jack_P(m, field=SYMBOLIC) -> SymPoly:
    return jack_table(len(m), field).P(m)


def jack_Phi(m, field=SYMBOLIC) -> SymPoly:
    return jack_table(len(m), field).Phi(m)


def jack_Psi(m, field=SYMBOLIC) -> SymPoly:
    return jack_table(len(m), field).Psi(m)


# ---------------------------------------------------------------------------
# Pieri coefficients
# ---------------------------------------------------------------------------


def _ratio(num, den, where):
    if not den:
        raise PoleInCoefficient(f"vanishing denominator in {where}")
    return num / den


def coeff_A(sign: int, J, x, d):
    """A_{+-,J}(x) = prod_{j in J, l not in J} (g_jl + sign*d/2) / g_jl,
    with g_jl = x_j - x_l - (d/2)(j - l)."""
    r = len(x)
    J = set(J)
    h = d / 2
    out = 1
    for j in J:
        for l in range(1, r + 1):
            if l in J:
                continue
            g = x[j - 1] - x[l - 1] - h * (j - l)
            out = out * _ratio(g + sign * h, g, f"A_{{{'+' if sign > 0 else '-'},{sorted(J)}}}")
            if not out:
                return out
    return out


def coeff_A_sub(sign: int, i: int, I, x, d):
    """A_{+-,i,I minus i}(x): the product restricted to j in I, j != i."""
    h = d / 2
    out = 1
    for j in I:
        if j == i:
            continue
        g = x[i - 1] - x[j - 1] - h * (i - j)
        out = out * _ratio(g + sign * h, g, "A_{i,I}")
    return out


def coeff_I(J, x, d) -> list:
    """I_{J^c}(u; x) as a p-indexed list of length r+1."""
    r = len(x)
    J = set(J)
    alpha = mpq(2) / d
    vals = [r - l + alpha * x[l - 1] for l in range(1, r + 1) if l not in J]
    es = elementary_values(vals)
    pref = alpha ** len(J)
    out = [0] * (r + 1)
    for q, e in enumerate(es):
        out[len(J) + q] = pref * e
    return out


def eigen_I(m, d) -> list:
    return coeff_I((), m, d)


def staircase_factor(J, x, d, shift=0):
    """prod_{j in J} (x_j + shift + (d/2)(r - j))."""
    r = len(x)
    out = 1
    for j in J:
        out = out * (x[j - 1] + shift + d * (r - j) / 2)
    return out


def shifted_e(p, m, d):
    """e_{r,p}(m + (d/2) delta)."""
    r = len(m)
    return elementary_values([mj + d * (r - j) / 2 for j, mj in enumerate(m, 1)])[p]


def _u_times(coeffs, f: SymPoly) -> list:
    return [f.scale(c) for c in coeffs]


def _add_slots(acc, other):
    return [a + b for a, b in zip(acc, other)]


def _zero_slots(r):
    return [SymPoly._raw(r, {}) for _ in range(r + 1)]


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


SEKIGUCHI_FORMS = ("generating", "scaled", "literal-erratum")


def verify_sekiguchi(m, table: JackTable, forms=SEKIGUCHI_FORMS) -> VerdictReport:
    """S_r(u)P_m = I_r(u;m) P_m, the scaled component relation, and the
    expected failure pattern of the unscaled component relation.

    Notes record each (p, holds) outcome of the unscaled relation.
    """
    r, d = table.r, table.d
    m = normalize(m, r)
    rep = VerdictReport("sekiguchi-eigen", {"r": r, "m": m, "d": table.field.key})
    P = table.P(m)
    lhs = table.S_image(m)
    if "generating" in forms:
        compare_slots(rep, lhs, _u_times(eigen_I(m, d), P), form="generating")
    for p in range(r + 1):
        e = shifted_e(p, m, d)
        if "scaled" in forms:
            scaled = lhs[p].scale((d / 2) ** p)
            rep.require((scaled - P.scale(e)).is_zero(), form="scaled", p=p)
        if "literal-erratum" in forms:
            literal_holds = (lhs[p] - P.scale(e)).is_zero()
            expect_fail = bool(((mpq(2) / d) ** p - 1) * e)
            rep.notes.append(f"p={p} literal={'holds' if literal_holds else 'fails'}")
            rep.require(literal_holds != expect_fail, form="literal-erratum", p=p,
                        literal_holds=literal_holds)
    return rep


def verify_pieri_classical(m, l, table: JackTable) -> VerdictReport:
    """e_{r,l} Phi_m expansion; for l = 1 also the first-order |z| and |d_z|
    Pieri formulas in both normalizations."""
    r, d = table.r, table.d
    m = normalize(m, r)
    rep = VerdictReport("pieri-classical", {"r": r, "m": m, "l": l, "d": table.field.key})
    one = table.field.one
    lhs = elementary_e(r, l, one) * table.Phi(m)
    rhs = SymPoly._raw(r, {})
    for J in subsets(r, l):
        a = coeff_A(+1, J, m, d)
        mJ = add_boxes(m, J, +1)
        if mJ is None:
            rep.require(not a, form="A+ off cone", J=J)
            continue
        rhs = rhs + table.Phi(mJ).scale(a)
    rep.require((lhs - rhs).is_zero(), form="e_l Phi")
    if l == 1:
        _first_order_pieri(rep, m, table)
    return rep


def _first_order_pieri(rep, x, table):
    r, d = table.r, table.d
    # |z| Phi_x and |z| Psi_x
    lhs = zmul(table.Phi(x))
    rhs = SymPoly._raw(r, {})
    for i in range(1, r + 1):
        a = coeff_A(+1, (i,), x, d)
        xi = add_boxes(x, (i,), +1)
        if xi is None:
            rep.require(not a, form="A+ off cone", i=i)
        else:
            rhs = rhs + table.Phi(xi).scale(a)
    rep.require((lhs - rhs).is_zero(), form="|z| Phi")
    lhs = zmul(table.Psi(x))
    rhs = SymPoly._raw(r, {})
    for i in range(1, r + 1):
        xi = add_boxes(x, (i,), +1)
        if xi is not None:
            c = staircase_factor((i,), x, d, shift=1) * coeff_A(-1, (i,), xi, d)
            rhs = rhs + table.Psi(xi).scale(c)
    rep.require((lhs - rhs).is_zero(), form="|z| Psi")
    # |d_z| Phi_x and |d_z| Psi_x
    lhs = dsum(table.Phi(x))
    rhs = SymPoly._raw(r, {})
    for i in range(1, r + 1):
        c = staircase_factor((i,), x, d) * coeff_A(-1, (i,), x, d)
        xi = add_boxes(x, (i,), -1)
        if xi is None:
            rep.require(not c, form="A- off cone", i=i)
        else:
            rhs = rhs + table.Phi(xi).scale(c)
    rep.require((lhs - rhs).is_zero(), form="|d| Phi")
    lhs = dsum(table.Psi(x))
    rhs = SymPoly._raw(r, {})
    for i in range(1, r + 1):
        xi = add_boxes(x, (i,), -1)
        if xi is not None:
            rhs = rhs + table.Psi(xi).scale(coeff_A(+1, (i,), xi, d))
    rep.require((lhs - rhs).is_zero(), form="|d| Psi")


def verify_twisted_raising(k, l, table: JackTable) -> VerdictReport:
    r, d = table.r, table.d
    k = normalize(k, r)
    rep = VerdictReport("twisted-raising", {"r": r, "k": k, "l": l, "d": table.field.key})
    h = d / 2
    # Phi form
    lhs = twisted_raising(l, table.Phi(k), d)
    rhs = _zero_slots(r)
    slot = SymPoly._raw(r, {})
    for J in subsets(r, l):
        a = coeff_A(+1, J, k, d)
        kJ = add_boxes(k, J, +1)
        if kJ is None:
            rep.require(not a, form="Phi: A+ off cone", J=J)
            continue
        phi = table.Phi(kJ)
        rhs = _add_slots(rhs, _u_times(coeff_I(J, k, d), phi.scale(a)))
        slot = slot + phi.scale(a)
    compare_slots(rep, lhs, rhs, form="Phi")
    rep.require((lhs[l].scale(h ** l) - slot).is_zero() if l <= r else slot.is_zero(),
                form="Phi slot u^(r-l)")
    # Psi form
    lhs = twisted_raising(l, table.Psi(k), d)
    rhs = _zero_slots(r)
    slot = SymPoly._raw(r, {})
    for J in subsets(r, l):
        kJ = add_boxes(k, J, +1)
        if kJ is None:
            continue
        c = coeff_A(-1, J, kJ, d) * staircase_factor(J, k, d, shift=1)
        psi = table.Psi(kJ).scale(c)
        rhs = _add_slots(rhs, _u_times(coeff_I(J, k, d), psi))
        slot = slot + psi
    compare_slots(rep, lhs, rhs, form="Psi")
    rep.require((lhs[l].scale(h ** l) - slot).is_zero() if l <= r else slot.is_zero(),
                form="Psi slot u^(r-l)")
    return rep


def verify_twisted_falling(x, l, table: JackTable) -> VerdictReport:
    r, d = table.r, table.d
    x = normalize(x, r)
    rep = VerdictReport("twisted-falling", {"r": r, "x": x, "l": l, "d": table.field.key})
    h = d / 2
    lhs = twisted_falling(l, table.Phi(x), d)
    rhs = _zero_slots(r)
    slot = SymPoly._raw(r, {})
    for J in subsets(r, l):
        c = coeff_A(-1, J, x, d) * staircase_factor(J, x, d)
        xJ = add_boxes(x, J, -1)
        if xJ is None:
            rep.require(not c, form="Phi: coefficient off cone", J=J)
            continue
        phi = table.Phi(xJ).scale(c)
        rhs = _add_slots(rhs, _u_times(coeff_I(J, x, d), phi))
        slot = slot + phi
    compare_slots(rep, lhs, rhs, form="Phi")
    rep.require((lhs[l].scale(h ** l) - slot).is_zero(), form="Phi slot u^(r-l)")
    lhs = twisted_falling(l, table.Psi(x), d)
    rhs = _zero_slots(r)
    slot = SymPoly._raw(r, {})
    for J in subsets(r, l):
        xJ = add_boxes(x, J, -1)
        if xJ is None:
            continue
        psi = table.Psi(xJ).scale(coeff_A(+1, J, xJ, d))
        rhs = _add_slots(rhs, _u_times(coeff_I(J, x, d), psi))
        slot = slot + psi
    compare_slots(rep, lhs, rhs, form="Psi")
    rep.require((lhs[l].scale(h ** l) - slot).is_zero(), form="Psi slot u^(r-l)")
    return rep


def verify_twisted_vanishing(l, f: SymPoly, d) -> VerdictReport:
    """Both twisted families annihilate f once l exceeds r."""
    rep = VerdictReport("twisted-vanishing", {"r": f.r, "l": l})
    for name, op in (("falling", twisted_falling), ("raising", twisted_raising)):
        rep.require(all(g.is_zero() for g in op(l, f, d)), form=name)
    return rep


def mysterious_sum(I, x, d):
    """Left-hand side of the summation identity whose value is |I|."""
    r = len(x)
    total = 0
    for i in I:
        s = x[i - 1] + d * (r - i) / 2
        xp = shift_vector(x, (i,), +1)
        xm = shift_vector(x, (i,), -1)
        total = total + (s + 1) * coeff_A_sub(-1, i, I, xp, d) * coeff_A_sub(+1, i, I, x, d)
        total = total - s * coeff_A_sub(+1, i, I, xm, d) * coeff_A_sub(-1, i, I, x, d)
    return total


def mysterious_sum_check(I, x, d) -> VerdictReport:
    rep = VerdictReport("lemma-sum", {"I": tuple(I), "x": tuple(x)})
    value = mysterious_sum(I, x, d)
    rep.require(value == len(I), value=value)
    return rep


def random_point(rng: random.Random, r: int):
    return tuple(mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(r))


def verify_lemma_sum(r, I, field=SYMBOLIC, samples=20, seed=0) -> VerdictReport:
    """The summation identity at seeded random rational points x.

    Points whose denominators vanish (possible only for specialized d) are
    rejected and redrawn.
    """
    rng = random.Random(f"{seed}:{r}:{tuple(I)}")
    d = field.d
    rep = VerdictReport("lemma-sum", {"r": r, "I": tuple(I), "samples": samples,
                                      "seed": seed, "d": field.key})
    drawn = 0
    while drawn < samples:
        x = tuple(field(v) for v in random_point(rng, r))
        try:
            value = mysterious_sum(I, x, d)
        except (PoleInCoefficient, ZeroDivisionError):
            continue
        drawn += 1
        rep.notes.append("x=(" + ",".join(str(v) for v in x) + ")")
        rep.require(value == len(I), x=x, value=value)
    return rep


def vanishing_off_cone(x, d) -> VerdictReport:
    """Box moves that leave the partition cone carry zero coefficients.

    For raising moves A_{+,J}(x) itself vanishes.  For lowering moves the
    full coefficient A_{-,J}(x) prod_{j in J}(x_j + (d/2)(r-j)) vanishes, and
    A_{-,J}(x) alone vanishes whenever x - eps_J stays nonnegative.
    """
    r = len(x)
    rep = VerdictReport("A-off-cone", {"x": tuple(x)})
    for J in subsets(r):
        if not J:
            continue
        up = shift_vector(x, J, +1)
        if not is_partition(up):
            rep.require(not coeff_A(+1, J, x, d), sign="+", J=J)
        down = shift_vector(x, J, -1)
        if not is_partition(down):
            a = coeff_A(-1, J, x, d)
            rep.require(not (a * staircase_factor(J, x, d)), sign="-", J=J)
            if min(down) >= 0:
                rep.require(not a, sign="- (monotonicity)", J=J)
    return rep

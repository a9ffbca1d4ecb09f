from gmpy2 import mpq
from hypothesis import given, strategies as st

from jpk.jack import jack_table, verify_twisted_vanishing
from jpk.operators import (
    apply_D, apply_H, apply_H_literal, apply_S, dsum, jack_eigenvalue, twisted_falling, zmul,
)
from jpk.partitions import SymPoly, enumerate_partitions
from jpk.scalars import DRat

d = DRat.var()
ONE = DRat.const(1)


def m(*k):
    return SymPoly.monomial(k, ONE)


def test_D_on_monomials():
    # by hand: (2 z1^3 - 2 z2^3)/(z1 - z2) = 2 (m20 + m11)
    f = apply_D(m(2, 0), d)
    assert f[(2, 0)] == 2 + 2 * d
    assert f[(1, 1)] == 2 * d
    g = apply_D(m(1, 1), d)
    assert g.coeffs == {(1, 1): d}


def test_eigenvalue_formula():
    assert jack_eigenvalue((2, 0), d) == 2 + 2 * d
    assert jack_eigenvalue((1, 1), d) == d


def test_H_rank_one():
    # r = 1: S = u + (2/d) z d/dz
    f = m(3)
    assert apply_H(1, f, d) == f.scale(6 / d)


def test_H_two_literal_vs_pairing_example():
    f = m(2, 1)
    for p in range(3):
        assert apply_H_literal(p, f, d) == apply_S(f, d)[p]


def test_trace_lines():
    lines = []
    apply_H_literal(1, m(1, 0), d, trace=lines.append)
    assert any(ln.startswith("l=1 I={1} J={}") for ln in lines)


def test_dsum_zmul():
    assert dsum(m(2, 0)) == m(1, 0).scale(2)
    assert zmul(m(1, 0)) == m(2, 0) + m(1, 1).scale(2)


sym3 = st.lists(st.tuples(st.integers(0, 3).flatmap(
    lambda n: st.sampled_from(enumerate_partitions(n, 3))), st.integers(-2, 2)),
    min_size=1, max_size=3).map(lambda ts: SymPoly(3, {k: DRat.const(c) for k, c in ts}))


@given(sym3)
def test_literal_matches_pairing(f):
    S = apply_S(f, d)
    for p in range(4):
        assert apply_H_literal(p, f, d) == S[p]


@given(sym3, st.sampled_from([mpq(2), mpq(1, 3), mpq(5)]))
def test_H_commute(f, d0):
    g = f.map_coeffs(lambda c: c.const_value() if hasattr(c, "const_value") else c)
    for p in (1, 2):
        for q in (2, 3):
            assert apply_H(p, apply_H(q, g, d0), d0) == apply_H(q, apply_H(p, g, d0), d0)


@given(sym3)
def test_twisted_vanish_above_r(f):
    assert verify_twisted_vanishing(4, f, d).passed


def test_twisted_falling_l0_is_S():
    P = jack_table(2).P((2, 1))
    assert twisted_falling(0, P, d) == apply_S(P, d)

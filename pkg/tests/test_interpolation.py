from math import comb

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from jpk.interpolation import (
    binom_coeff, ijack_P, ijack_P_dense, ijack_table, verify_difference_eq,
    verify_ijack_pieri, verify_vanishing,
)
from jpk.partitions import SymPoly, enumerate_partitions, partitions_upto, power_sum_1
from jpk.scalars import DRat, SpecializedField, drat_eval

from oracles import falling, shifted_schur
from jpk.partitions import sym_collect
from jpk.polyring import MPoly

d = DRat.var()
ONE = DRat.const(1)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_single_box(r):
    mu = (1,) + (0,) * (r - 1)
    expect = power_sum_1(r, ONE) - SymPoly.const(r, d * r * (r - 1) / 4)
    assert ijack_P(mu) == expect


def test_rank_one_falling_factorial():
    for n in range(6):
        ff = sym_collect(falling(MPoly.var(1, 1), n))
        assert ijack_P((n,)) == ff.map_coeffs(DRat.const)


def test_rank_one_binomial():
    for n in range(7):
        for k in range(n + 1):
            assert binom_coeff((k,), (n,)) == comb(n, k)


@pytest.mark.parametrize("r", [2, 3])
def test_shifted_schur_at_d2(r):
    it = ijack_table(r, SpecializedField(2))
    for mu in partitions_upto(4, r):
        assert it.ip(mu) == shifted_schur(mu)


@pytest.mark.parametrize("r", [2, 3])
def test_dense_matches_newton(r):
    for mu in partitions_upto(3, r):
        assert ijack_P_dense(mu) == ijack_P(mu)


@given(st.integers(1, 3).flatmap(
    lambda r: st.integers(0, 3).flatmap(lambda n: st.sampled_from(enumerate_partitions(n, r)))))
def test_vanishing_and_top(m):
    assert verify_vanishing(m, 2, ijack_table(len(m))).passed


@given(st.integers(0, 3).flatmap(lambda n: st.sampled_from(enumerate_partitions(n, 2))),
       st.sampled_from([mpq(2), mpq(1, 3)]))
def test_specialization_matches(m, d0):
    assert ijack_P(m).map_coeffs(lambda c: drat_eval(c, d0)) == ijack_P(m, SpecializedField(d0))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_difference_and_pieri_small(r):
    it = ijack_table(r)
    for k in partitions_upto(2, r):
        assert verify_difference_eq(k, 2, it).passed
        assert verify_ijack_pieri(k, 2, it).passed

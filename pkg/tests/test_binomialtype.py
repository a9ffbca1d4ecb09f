import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from jpk.binomialtype import (
    SeriesF, bernoulli_numbers, bernoulli_poly, bernoulli_series, binomial_family,
    expand_in_psi, kernel_0F0, verify_binomial_shift, verify_exp_binomial, verify_intertwine,
    verify_kernel_symmetry, verify_psi_pieri, verify_twisted_pieri_binomial,
)
from jpk.jack import jack_table
from jpk.partitions import SymPoly, partitions_upto
from jpk.scalars import DRat, SpecializedField

from oracles import BERNOULLI, bernoulli_poly_coeffs

ONE = DRat.const(1)


def test_bernoulli_numbers():
    assert bernoulli_numbers(6) == BERNOULLI


@pytest.mark.parametrize("n", range(7))
def test_rank_one_bernoulli_polys(n):
    f = bernoulli_poly((n,))
    expect = SymPoly(1, {(k,): DRat.const(c) for k, c in bernoulli_poly_coeffs(n).items()})
    assert f == expect


def test_b2_anchor():
    assert str(bernoulli_poly((2,))) == "m[2] - m[1] + (1/6)*m[0]"
    assert bernoulli_poly((0, 0)) == SymPoly.const(2, ONE)


def test_kernel_rank_one_is_exponential():
    from math import factorial

    k = kernel_0F0(1, 3)
    for n in range(4):
        assert k.terms[(n,)] == SymPoly.monomial((n,), DRat.const(1)).scale(ONE)
    t = jack_table(1)
    for n in range(4):
        assert t.Psi((n,)) == SymPoly.monomial((n,), DRat.const(mpq(1, factorial(n))))


def test_kernel_low_degree():
    k = kernel_0F0(3, 1)
    assert k.terms[(0, 0, 0)] == SymPoly.const(3, ONE)
    assert k.terms[(1, 0, 0)] == SymPoly.monomial((1, 0, 0), DRat.const(mpq(1, 3)))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_family_of_one_is_phi(r):
    t = jack_table(r)
    fam = binomial_family(SeriesF.one(r, 3), 3, t)
    for m, f in fam.items():
        assert f == t.Phi(m)


def test_expand_in_psi_round_trip():
    t = jack_table(2)
    for k in partitions_upto(3, 2):
        series = {lam: SymPoly.const(2, c) for lam, c in t.Psi(k).coeffs.items()}
        out = expand_in_psi(series, 3, t)
        assert set(out) == {k} and out[k] == SymPoly.const(2, ONE)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_kernel_symmetry(r):
    assert verify_kernel_symmetry(4 if r < 3 else 3, jack_table(r)).passed


@given(st.integers(1, 2), st.integers(1, 4), st.integers(0, 3))
def test_truncation_coherence(r, N, drop):
    t = jack_table(r)
    Np = max(0, N - drop)
    big = binomial_family(bernoulli_series(r, N), N, t)
    small = binomial_family(bernoulli_series(r, Np), Np, t)
    for m, f in small.items():
        assert big[m] == f


@pytest.mark.parametrize("r", [1, 2])
def test_binomial_identities_small(r):
    t = jack_table(r)
    for l in range(r + 1):
        assert verify_intertwine(l, 3, t).passed
    for k in partitions_upto(2, r):
        assert verify_exp_binomial(k, 3, t).passed
    for m in partitions_upto(3, r):
        for l in range(r + 1):
            assert verify_psi_pieri(m, l, t).passed
    for F in (SeriesF.one(r, 3), bernoulli_series(r, 3)):
        fam = binomial_family(F, 3, t)
        for m in partitions_upto(3, r):
            assert verify_binomial_shift(F, m, fam, t).passed
            for l in range(r + 1):
                assert verify_twisted_pieri_binomial(F, m, l, fam, t).passed


def test_rank_one_derivative_and_shift():
    # B_n' = n B_{n-1}, B_n(z+1) - B_n(z) = n z^(n-1)
    from jpk.operators import dsum
    from jpk.partitions import sym_collect, sym_expand

    for n in range(1, 7):
        b, prev = bernoulli_poly((n,)), bernoulli_poly((n - 1,))
        assert dsum(b) == prev.scale(n)
        shifted = sym_collect(sym_expand(b).shift_ones())
        assert shifted - b == SymPoly.monomial((n - 1,), DRat.const(n))


def test_specialized_family():
    d0 = mpq(1, 3)
    t = jack_table(2, SpecializedField(d0))
    F = bernoulli_series(2, 3, SpecializedField(d0))
    fam = binomial_family(F, 3, t)
    sym = binomial_family(bernoulli_series(2, 3), 3, jack_table(2))
    from jpk.scalars import drat_eval

    for m in fam:
        assert sym[m].map_coeffs(lambda c: drat_eval(c, d0)) == fam[m]

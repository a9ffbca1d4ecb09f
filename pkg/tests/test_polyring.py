import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from jpk.polyring import ArityMismatch, MPoly, NotDivisible, vandermonde
from jpk.scalars import DRat

d = DRat.var()


def mpolys(r, maxdeg=3):
    mono = st.tuples(*[st.integers(0, maxdeg)] * r)
    coef = st.integers(-4, 4).map(mpq)
    return st.dictionaries(mono, coef, max_size=5).map(lambda t: MPoly(r, t))


def test_basic_ops():
    z1, z2 = MPoly.var(2, 1), MPoly.var(2, 2)
    f = z1 * z1 + z2.scale(d / 2)
    assert str(f) == "z1^2 + (d/2)*z2"
    assert f.diff(1) == z1.scale(2)
    assert (f / 2).terms[(2, 0)] == mpq(1, 2)


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        MPoly.var(2, 1) + MPoly.var(3, 1)
    with pytest.raises(ArityMismatch):
        MPoly.var(2, 1).eval((1,))


def test_not_divisible():
    z1, z2 = MPoly.var(2, 1), MPoly.var(2, 2)
    with pytest.raises(NotDivisible):
        (z1 * z1 + z2).exact_div(z1 - z2)


def test_vandermonde_antisymmetric():
    V = vandermonde(3)
    assert V.eval((mpq(3), mpq(2), mpq(1))) == 2
    assert V.eval((mpq(2), mpq(3), mpq(1))) == -2


def test_shift_ones():
    z1 = MPoly.var(2, 1)
    g = (z1 * z1).shift_ones()
    assert g == z1 * z1 + z1.scale(2) + MPoly.const(2, 1)


@given(mpolys(2), mpolys(2).filter(lambda g: not g.is_zero()))
def test_division_round_trip(f, g):
    assert (f * g).exact_div(g) == f


@given(mpolys(3))
def test_partials_commute(f):
    assert f.diff(1).diff(2) == f.diff(2).diff(1)
    assert f.diff(3).diff(1) == f.diff(1).diff(3)


@given(mpolys(2), mpolys(2))
def test_leibniz(f, g):
    for j in (1, 2):
        assert (f * g).diff(j) == f.diff(j) * g + f * g.diff(j)


@given(mpolys(2), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_shift_is_substitution(f, pt):
    pt = tuple(mpq(v) for v in pt)
    assert f.shift_ones().eval(pt) == f.eval(tuple(v + 1 for v in pt))

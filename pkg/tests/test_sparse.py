from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from waring.sparse import SparsePoly, first_difference, spoly_mul, spoly_pow
from waring.tpoly import TPoly

from conftest import rationals

t = TPoly.t()


def polys(nvars=2):
    exps = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.dictionaries(exps, rationals, max_size=5).map(lambda d: SparsePoly(nvars, d))


def test_binomial_square():
    x0, x1 = SparsePoly.var(2, 0), SparsePoly.var(2, 1)
    assert spoly_pow(x0 + x1, 2) == SparsePoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_square_with_parameter():
    ell = SparsePoly.linear([TPoly([1]), -t])
    sq = spoly_pow(ell, 2)
    assert sq.coeff((2, 0)) == 1
    assert sq.coeff((1, 1)) == -2 * t
    assert sq.coeff((0, 2)) == t * t


def test_trinomial_ninth_power():
    p = spoly_pow(SparsePoly.linear([1, 1, 1]), 9)
    assert len(p.terms) == 55
    assert p.coeff((4, 3, 2)) == 1260


def test_zero_coefficients_dropped():
    p = SparsePoly(2, {(1, 0): 0, (0, 1): 2})
    assert list(p.terms) == [(0, 1)]
    assert not SparsePoly.zero(3)


def test_arity_checked():
    with pytest.raises(ValueError):
        SparsePoly(2, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        SparsePoly.var(2, 0) + SparsePoly.var(3, 0)


def test_homogeneous_components():
    p = SparsePoly(2, {(0, 0): 3, (1, 0): 1, (1, 1): 2, (0, 2): 1})
    comps = p.homogeneous_components()
    assert sorted(comps) == [0, 1, 2]
    assert comps[2] == SparsePoly(2, {(1, 1): 2, (0, 2): 1})
    assert not p.is_homogeneous() and comps[2].is_homogeneous()


def test_compose_linear_with_shift():
    # x*y at x = u + 1, y = 2v
    p = SparsePoly(2, {(1, 1): 1})
    g = p.compose_linear([[1, 0], [0, 2]], [1, 0])
    assert g == SparsePoly(2, {(1, 1): 2, (0, 1): 2})


def test_first_difference():
    a = SparsePoly(2, {(2, 0): 1, (0, 2): 1})
    b = SparsePoly(2, {(2, 0): 1, (0, 2): 2})
    assert first_difference(a, b) == (0, 2)
    assert first_difference(a, a) is None


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(0, 12))
def test_pow_matches_repeated_mul(coeffs, d):
    ell = SparsePoly.linear(coeffs)
    acc = SparsePoly.const(len(coeffs), 1)
    for _ in range(d):
        acc = spoly_mul(acc, ell)
    assert spoly_pow(ell, d) == acc


@given(polys(), polys(), st.tuples(rationals, rationals))
def test_evaluate_is_homomorphism(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert Fraction((a + b).evaluate(pt)) == Fraction(a.evaluate(pt)) + Fraction(b.evaluate(pt))

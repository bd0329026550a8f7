from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from waring.tpoly import (
    TPoly,
    TRat,
    format_tpoly,
    parse_tpoly,
    tpoly_add,
    tpoly_eval,
    tpoly_gcd,
    tpoly_mul,
    trat_reduce,
)

from conftest import rationals, small_ints

t = TPoly.t()
tpolys = st.lists(small_ints, max_size=6).map(TPoly)
nonzero_tpolys = tpolys.filter(bool)


def test_zero_is_trimmed():
    assert TPoly([0, 0, 0]) == TPoly([])
    assert TPoly([]).degree == -1
    assert format_tpoly(TPoly([])) == "0"


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (t * t - 1, 2, 3),
        (TPoly([]), Fraction(7, 3), 0),
        (parse_tpoly("5040t^7-10080t^5+5040t^3"), 2, 362880),
        (t + 1, Fraction(1, 2), Fraction(3, 2)),
    ],
)
def test_eval(p, q, expected):
    assert tpoly_eval(p, q) == expected


def test_product_of_conjugates():
    assert tpoly_mul(t - 1, t + 1) == t * t - 1
    assert tpoly_add(t, -t) == TPoly([])


def test_gcd_normalized():
    assert tpoly_gcd(t**3 - t, t**2 - 1) == t**2 - 1
    assert tpoly_gcd(2 * t + 2, 4 * t + 4) == 2 * t + 2
    assert tpoly_gcd(TPoly([]), 3 * t) == 3 * t


def test_reduce_removes_common_factor():
    r = trat_reduce(t * t - t, t * t - 1)
    assert (r.num, r.den) == (t, t + 1)


def test_reduce_normalizes_sign_and_content():
    r = TRat(TPoly([2]), -4 * t)
    assert (r.num, r.den) == (TPoly([-1]), 2 * t)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        trat_reduce(t, TPoly([]))


@pytest.mark.parametrize("text", ["0", "1", "-t", "t^2-1", "5040t^7-10080t^5+5040t^3", "-2t^9-2t^3", "-4t^11+4t^9+4t^3-4t"])
def test_format_parse_roundtrip(text):
    assert format_tpoly(parse_tpoly(text)) == text


def test_exquo_and_shift():
    p = (t - 1) * (t + 2)
    assert p.exquo(t - 1) == t + 2
    with pytest.raises(ArithmeticError):
        p.exquo(t - 3)
    assert (t + 1).shift(2) == t**3 + t**2
    assert (t + 1).compose_power(3) == t**3 + 1


@given(tpolys, tpolys, tpolys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


@given(tpolys, tpolys, rationals)
def test_eval_is_homomorphism(a, b, q):
    assert tpoly_eval(a * b, q) == tpoly_eval(a, q) * tpoly_eval(b, q)
    assert tpoly_eval(a + b, q) == tpoly_eval(a, q) + tpoly_eval(b, q)


@given(tpolys, nonzero_tpolys)
def test_reduce_is_idempotent(n, d):
    r = trat_reduce(n, d)
    assert trat_reduce(r.num, r.den) == r


@given(tpolys, nonzero_tpolys, rationals)
def test_reduce_preserves_value(n, d, q):
    dq = tpoly_eval(d, q)
    r = trat_reduce(n, d)
    if dq != 0 and tpoly_eval(r.den, q) != 0:
        assert tpoly_eval(r.num, q) / Fraction(tpoly_eval(r.den, q)) == Fraction(tpoly_eval(n, q)) / dq


@given(nonzero_tpolys, nonzero_tpolys)
def test_gcd_divides_both(a, b):
    g = tpoly_gcd(a, b)
    a.exquo(g)
    b.exquo(g)


@given(tpolys)
def test_format_parse_property(p):
    assert parse_tpoly(format_tpoly(p)) == p

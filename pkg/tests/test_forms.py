from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from waring.combinatorics import exponent_vectors
from waring.errors import DegenerateInputError, DegenerateParameterError
from waring.forms import (
    F_count,
    K_count,
    K_count_enumerated,
    canonical_form,
    decompose_form,
    dehomogenize,
    expand_form_decomposition,
    general_form,
    homogenize,
)
from waring.sparse import SparsePoly

from conftest import rationals

TABLE = {
    (2, 10): (205, 133),
    (2, 50): (18970, 3613),
    (2, 100): (144871, 14713),
    (3, 10): (831, 696),
    (3, 50): (286893, 83416),
    (3, 100): (4207287, 666816),
    (5, 30): (1884921, 1305092),
    (5, 50): (31651125, 16001276),
    (5, 100): (1669982466, 502701736),
}


def F(k):
    return tuple(Fraction(x) for x in k)


def test_xy_form():
    fd = decompose_form(SparsePoly(2, {(1, 1): 1}), 2)
    assert fd.terms == {F((1, 1)): Fraction(1, 4), F((1, -1)): Fraction(-1, 4)}


def test_sum_of_squares():
    fd = decompose_form(SparsePoly(2, {(2, 0): 1, (0, 2): 1}), 2)
    assert fd.terms == {F((1, 0)): 1, F((0, 1)): 1}


def test_general_binary_quadric():
    fd = decompose_form(general_form(2, 2), 2)
    assert set(fd.terms) == {F((1, 0)), F((0, 1)), F((1, 1)), F((1, -1))}
    assert len(fd) == K_count(1, 2) == 4
    assert expand_form_decomposition(fd) == general_form(2, 2)


def test_canonical_form():
    assert canonical_form([0, 2, -4]) == (F((0, 1, -2)), 2)
    with pytest.raises(DegenerateInputError):
        canonical_form([0, 0])


def test_rejects_inhomogeneous():
    with pytest.raises(DegenerateInputError, match="homogeniz"):
        decompose_form(SparsePoly(2, {(1, 0): 1, (0, 0): 1}))


def test_degenerate_parameter_lists_monomials():
    with pytest.raises(DegenerateParameterError) as info:
        decompose_form(SparsePoly(5, {(4, 3, 2, 0, 0): 1, (2, 2, 2, 2, 1): 1}), 1)
    assert info.value.monomials == ((4, 3, 2, 0, 0),)


def test_auto_parameter_skips_roots():
    fd = decompose_form(SparsePoly(3, {(4, 3, 2): 1}))
    assert fd.q == 2


@pytest.mark.parametrize("nd, expected", list(TABLE.items()))
def test_table(nd, expected):
    assert (F_count(*nd), K_count(*nd)) == expected
    assert K_count(*nd) < F_count(*nd)


@pytest.mark.parametrize("n, D, expected", [(1, 2, 4), (2, 10, 133), (3, 10, 696)])
def test_K_count_enumerated(n, D, expected):
    assert K_count_enumerated(n, D, 2) == expected


def test_K_count_matches_enumeration():
    for n in range(4):
        for D in range(1, 13):
            assert K_count(n, D) == K_count_enumerated(n, D, 2), (n, D)


def test_K_over_F_ratio_bounded():
    # K(2, D) ~ 1.5 D^2 and F(2, D) ~ D^3 / (6 zeta(3)), so K * D / F tends to about 10.82
    ratios = [K_count(2, D) * D / F_count(2, D) for D in range(1, 201)]
    assert max(ratios) < 11


def test_homogenize_examples():
    p = SparsePoly(1, {(2,): 1, (1,): 3, (0,): 1})
    assert homogenize(p, 0) == SparsePoly(2, {(0, 2): 1, (1, 1): 3, (2, 0): 1})
    assert dehomogenize(SparsePoly(2, {(2, 0): 1}), 0) == SparsePoly.const(1, 1)


forms = st.builds(
    lambda nv, D, cs: SparsePoly(nv, dict(zip(exponent_vectors(nv, D), cs))),
    st.integers(1, 3),
    st.integers(1, 6),
    st.lists(rationals, min_size=1, max_size=6),
).filter(bool)


@given(forms)
def test_decompose_form_verifies(f):
    fd = decompose_form(f)
    assert expand_form_decomposition(fd) == f


@given(forms)
def test_homogenize_roundtrip(f):
    g = dehomogenize(f, 0)
    if g:
        assert homogenize(g, 0, f.total_degree()) == f

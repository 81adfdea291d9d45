import itertools

import pytest
from hypothesis import given, strategies as st

from rmtcount import genfuncs
from rmtcount.partitions import Partition, iterate_partitions
from rmtcount.polyring import Caps, Factor, MultiPoly, expand_factor_product
from rmtcount.symfunc import (
    hook_schur,
    hook_schur_coeff,
    kostka,
    outer_product,
    rect_schur_check,
    restricted_cauchy_sum,
    schur_poly,
)


def ssyt_count(shape, content):
    """Brute-force Kostka number: fill cells row by row with weakly increasing
    rows and strictly increasing columns."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    letters = [k + 1 for k, c in enumerate(content) for _ in range(c)]
    found = 0
    for perm in set(itertools.permutations(letters)):
        t = dict(zip(cells, perm))
        if all(t[i, j] <= t[i, j + 1] for (i, j) in cells if (i, j + 1) in t) and \
           all(t[i, j] < t[i + 1, j] for (i, j) in cells if (i + 1, j) in t):
            found += 1
    return found


@pytest.mark.parametrize("shape, content, expected", [
    ((2, 1), (1, 1, 1), 2),
    ((3, 2), (3, 2), 1),
    ((3,), (2, 1), 1),
])
def test_kostka_examples(shape, content, expected):
    assert kostka(shape, content) == expected


def test_kostka_matches_tableau_enumeration():
    for w in range(1, 6):
        for shape in iterate_partitions(w):
            for content in iterate_partitions(w):
                assert kostka(shape, content) == ssyt_count(shape, content), (shape, content)


def test_kostka_content_order_irrelevant():
    assert kostka((3, 1), (1, 2, 1)) == kostka((3, 1), (2, 1, 1)) == 2


def test_schur_examples():
    assert schur_poly((1,), 2) == MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    assert schur_poly((1, 1), 2) == MultiPoly(2, {(1, 1): 1})
    assert schur_poly((2, 1), 3).coefficient((1, 1, 1)) == 2


def test_schur_routes_agree():
    for w in range(6):
        for shape in iterate_partitions(w):
            assert schur_poly(shape, 3) == schur_poly(shape, 3, method="tableau")


def test_hook_schur_examples():
    assert hook_schur_coeff((1,), 1, 1, (1,), ()) == 1
    assert hook_schur_coeff((1,), 1, 1, (), (1,)) == 1
    assert hook_schur_coeff((2,), 1, 1, (1,), (1,)) == 1
    # HS_(2)(alpha; beta) = alpha^2 + alpha beta
    assert hook_schur((2,), 1, 1) == MultiPoly(2, {(2, 0): 1, (1, 1): 1})


def test_hook_schur_reduces_to_schur():
    for shape in ((2, 1), (3,), (1, 1, 1)):
        assert hook_schur(shape, 3, 0) == schur_poly(shape, 3)


def _hook_cauchy_lhs(dims, deg, index):
    k1, l1, k2, l2 = dims
    caps = Caps(total=2 * deg)
    lhs = MultiPoly(sum(dims), {}, caps)
    for w in range(deg + 1):
        for lam in iterate_partitions(w):
            lhs = lhs + outer_product(hook_schur(lam, k1, l1, Caps(total=w), index),
                                      hook_schur(lam, k2, l2, Caps(total=w), index), caps)
    return lhs


@pytest.mark.parametrize("dims, deg", [((1, 1, 1, 1), 4), ((2, 1, 1, 2), 3), ((1, 2, 2, 1), 3)])
def test_hook_cauchy_identity(dims, deg):
    rhs = genfuncs.block_genfunc(*dims, Caps(total=2 * deg))
    assert _hook_cauchy_lhs(dims, deg, "standard") == rhs


@pytest.mark.parametrize("dims, deg", [((1, 1, 1, 1), 4), ((2, 1, 1, 2), 3), ((1, 2, 2, 1), 3)])
def test_printed_hook_index_breaks_cauchy_identity(dims, deg):
    rhs = genfuncs.block_genfunc(*dims, Caps(total=2 * deg))
    assert _hook_cauchy_lhs(dims, deg, "printed") != rhs


def test_restricted_cauchy_row_bound():
    # kappa_1 <= 1 with a single alpha and beta leaves only kappa in {(), (1)}
    f = restricted_cauchy_sum(1, 1, 1, 2)
    assert f == MultiPoly(2, {(0, 0): 1, (1, 1): 1})
    # with no row bound the geometric series reappears
    assert restricted_cauchy_sum(2, 1, 1, 2) == MultiPoly(2, {(0, 0): 1, (1, 1): 1, (2, 2): 1})


def test_restricted_cauchy_coefficients():
    for N in range(1, 4):
        assert restricted_cauchy_sum(N, 1, 1, 1).coefficient((1, 1)) == 1
    assert restricted_cauchy_sum(2, 2, 2, 2).coefficient((1, 1, 1, 1)) == 2


def test_unrestricted_cauchy_identity():
    for m, n in ((1, 2), (2, 2), (3, 2)):
        caps = Caps(total=8)
        lhs = restricted_cauchy_sum(4, m, n, 4, caps)
        rhs = expand_factor_product(genfuncs.cauchy_factors(m, n), m + n, caps)
        assert lhs == rhs


def test_rect_schur_check():
    assert rect_schur_check(1, 1, 1) == MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    assert rect_schur_check(1, 1, 2) == MultiPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert rect_schur_check(1, 1, 2).coefficient((1, 1)) == 1


@given(st.integers(0, 5).flatmap(lambda w: st.sampled_from(list(iterate_partitions(w)))),
       st.permutations([0, 1, 2]))
def test_schur_is_symmetric(shape, perm):
    s = schur_poly(shape, 3)
    swapped = MultiPoly(3, {tuple(e[p] for p in perm): c for e, c in s.terms.items()})
    assert swapped == s


@given(st.integers(1, 5).flatmap(lambda w: st.sampled_from(list(iterate_partitions(w)))))
def test_schur_coefficients_are_kostka(shape):
    s = schur_poly(shape, 4)
    for e, c in s.terms.items():
        assert c == kostka(shape, e)

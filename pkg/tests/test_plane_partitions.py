import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rmtcount import plane_partitions as pp
from rmtcount.polyring import MultiPoly


def naive_box(a, b, c):
    """Heights as a flat product, kept when rows and columns decrease; returns {weight: count}."""
    out = {}
    for flat in itertools.product(range(c + 1), repeat=a * b):
        h = [flat[i * b:(i + 1) * b] for i in range(a)]
        if all(h[i][j] >= h[i][j + 1] for i in range(a) for j in range(b - 1)) and \
           all(h[i][j] >= h[i + 1][j] for i in range(a - 1) for j in range(b)):
            out[sum(flat)] = out.get(sum(flat), 0) + 1
    return out


def naive_sym(a, top, even):
    """Symmetric a x a plane partitions, weight = upper triangle including the diagonal."""
    out = {}
    for flat in itertools.product(range(top + 1), repeat=a * a):
        h = [flat[i * a:(i + 1) * a] for i in range(a)]
        if any(h[i][j] != h[j][i] for i in range(a) for j in range(a)):
            continue
        if any(h[i][j] < h[i][j + 1] for i in range(a) for j in range(a - 1)):
            continue
        if even and any(h[i][i] % 2 for i in range(a)):
            continue
        w = sum(h[i][j] for i in range(a) for j in range(i, a))
        out[w] = out.get(w, 0) + 1
    return out


def univariate(d):
    return MultiPoly(1, {(k,): v for k, v in d.items()})


@pytest.mark.parametrize("box, expected", [((1, 1, 1), 2), ((1, 1, 4), 5), ((2, 2, 2), 20), ((3, 3, 3), 980)])
def test_box_counts(box, expected):
    for method in ("product", "gamma", "barnes", "qgen", "schur"):
        assert pp.count_box(*box, method) == expected


def test_barnes_values():
    assert [pp.barnes_g(n) for n in range(1, 6)] == [1, 1, 1, 2, 12]


def test_printed_gamma_and_barnes_overcount_by_c_factorial():
    for a, b, c in [(1, 1, 1), (2, 2, 2), (2, 3, 3), (1, 2, 4)]:
        true = pp.macmahon_product(a, b, c)
        assert pp.box_count_gamma(a, b, c, printed=True) == math.factorial(c) * true
        assert pp.box_count_barnes(a, b, c, printed=True) == math.factorial(c) * true


def test_box_qgen_examples():
    assert pp.macmahon_qgen(1, 1, 1).univariate_coefficients() == [1, 1]
    assert pp.macmahon_qgen(1, 1, 2).univariate_coefficients() == [1, 1, 1]
    assert pp.macmahon_qgen(2, 1, 1).univariate_coefficients() == [1, 1, 1]


def test_box_routes_against_naive():
    for a, b, c in [(1, 2, 3), (2, 2, 2), (2, 3, 2), (3, 2, 1), (2, 2, 3)]:
        ref = univariate(naive_box(a, b, c))
        assert pp.box_qgen_brute(a, b, c) == ref
        assert pp.macmahon_qgen(a, b, c) == ref
        assert pp.qgen_via_schur(a, b, c) == ref


def test_box_brute_limit():
    with pytest.raises(ValueError):
        pp.count_box(4, 3, 1, "brute")
    with pytest.raises(ValueError):
        pp.count_box(0, 1, 1)


def test_sym_even_examples():
    assert pp.count_sym_even_diag(1, 1) == 2
    assert pp.count_sym_even_diag(2, 1) == 5
    assert pp.count_sym(1, 2) == 3


def test_sym_routes_against_naive():
    for a in (1, 2, 3):
        for c in (1, 2):
            even = univariate(naive_sym(a, 2 * c, True))
            assert pp.sym_qgen_brute(a, 2 * c, True) == even
            assert pp.sym_even_qgen_product(a, c) == even
            assert pp.sym_qgen_schur(a, c, even=True).evaluate([1]) == even.evaluate([1])
            free = univariate(naive_sym(a, c, False))
            assert pp.sym_qgen_brute(a, c, False) == free
            assert pp.count_sym(a, c) == free.evaluate([1])


def test_sym_even_closed_forms():
    for a in range(1, 4):
        for c in range(1, 4):
            n = pp.count_sym_even_product(a, c)
            assert pp.count_sym_even_gamma(a, c) == Fraction(n)
            assert pp.count_sym_even_barnes(a, c) == Fraction(n)
            assert pp.count_sym_even_diag(a, c, "brute") == n
            assert pp.count_sym_even_diag(a, c, "schur") == n


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_box_symmetry_and_product(a, b, c):
    n = pp.macmahon_product(a, b, c)
    assert n == pp.macmahon_product(b, a, c) == pp.macmahon_product(c, b, a)
    assert n == pp.box_count_gamma(a, b, c) == pp.box_count_barnes(a, b, c)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_box_qgen_palindromic(a, b, c):
    # complementing heights maps weight w to abc - w
    coeffs = pp.macmahon_qgen(a, b, c).univariate_coefficients()
    assert coeffs == coeffs[::-1] and len(coeffs) == a * b * c + 1

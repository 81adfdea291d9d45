import itertools

import pytest
from hypothesis import given, strategies as st

from rmtcount import genfuncs
from rmtcount.group_moments import (
    GroupId,
    MomentSpec,
    bisymmetric_coeff,
    block_symmetric_moment,
    exact_moment,
    mixed_moment,
    orthogonal_free_diag_moment,
    orthogonal_prescribed_diag_moment,
    orthogonal_sc_moment,
    parse_extra,
    point_symmetric_coeff,
    symplectic_sc_moment,
    unitary_sc_moment,
    zero_one_moment,
)
from rmtcount.matrix_enum import CLASSES, MatrixClassSpec, Symmetry, count, count_point_symmetric
from rmtcount.partitions import frequencies, iterate_partitions


def freq(mu):
    return frequencies(mu)


# --- worked examples ---------------------------------------------------------

def test_unitary_examples():
    assert unitary_sc_moment(5, [2], [2]) == 2
    assert unitary_sc_moment(1, [2], [2]) == 1  # below the N >= |mu| threshold
    for N in (1, 3, 7):
        assert unitary_sc_moment(N, [1], [1]) == 1
    assert unitary_sc_moment(2, [0], [0]) == 1
    assert unitary_sc_moment(6, [2], [2]) == count(CLASSES["nonneg"], (1, 1), (1, 1)).value


def test_magic_square_moment():
    # a_j = k at index j: Sc_j^k
    assert unitary_sc_moment(6, [2], [2]) == 2
    assert unitary_sc_moment(6, [0, 2], [0, 2]) == 3
    assert unitary_sc_moment(6, [3], [3]) == 6


def test_orthogonal_and_symplectic_examples():
    assert orthogonal_sc_moment(2, [2]) == 1
    assert symplectic_sc_moment(1, [0, 1]) == 1
    assert symplectic_sc_moment(3, [1]) == 0
    assert orthogonal_free_diag_moment(1, [1]) == 1
    assert orthogonal_free_diag_moment(2, [2]) == 2
    assert orthogonal_prescribed_diag_moment(2, [2], 0) == 1
    assert orthogonal_prescribed_diag_moment(2, [2], 2) == 1


def test_bisymmetric_and_point_examples():
    # row sums are given for rows 1..n of the 2n x 2n matrix
    assert bisymmetric_coeff(1, (1,), 1, 1) == 2
    assert bisymmetric_coeff(1, (1,), 1, 0) == 1
    assert point_symmetric_coeff(1, (1,), (1,)) == 2
    assert point_symmetric_coeff(1, (1,), (1,), method="cauchy") == 2


def test_zero_one_examples():
    assert zero_one_moment(3, [1], [1]) == 1
    assert zero_one_moment(2, [2], [2]) == 2
    assert zero_one_moment(2, [0, 1], [2]) == 1


def test_mixed_examples():
    assert mixed_moment(2, [1], [1], [1], [1]) == 2
    assert mixed_moment(3, [1], [1], [0], [0]) == 1
    assert mixed_moment(1, [0], [0], [1], [1]) == 1


def test_block_symmetric_examples():
    assert block_symmetric_moment(1, [1], [1], "Sp") == 1
    assert block_symmetric_moment(6, [1], [1], "O") == 1
    assert block_symmetric_moment(2, [1], [0], "Sp") == 0


# --- threshold behaviour -----------------------------------------------------

def test_zero_one_threshold_counterexample():
    # rows (1, 1), column (2): the single 0-1 matrix [[1], [1]]
    truth = count(CLASSES["zeroone"], (1, 1), (2,)).value
    assert truth == 1
    assert zero_one_moment(1, [2], [0, 1]) == 0
    assert zero_one_moment(2, [2], [0, 1]) == truth


def test_mixed_threshold_counterexample():
    truth = count(CLASSES["block"], (1,), (1,), (1,), (1,)).value
    assert truth == 2
    assert mixed_moment(1, [1], [1], [1], [1]) == 1
    assert mixed_moment(2, [1], [1], [1], [1]) == truth


def test_bisymmetric_hook_route_fails_below_threshold():
    mu = (2, 1)
    assert bisymmetric_coeff(3, mu, 1, 1, "hook") == bisymmetric_coeff(0, mu, 1, 1)
    assert bisymmetric_coeff(1, mu, 1, 1, "hook") != bisymmetric_coeff(0, mu, 1, 1)


# --- three-way agreement at small weights ------------------------------------

def test_unitary_three_way():
    for w in range(1, 5):
        for mu in iterate_partitions(w):
            for mut in iterate_partitions(w):
                brute = count(CLASSES["nonneg"], mu, mut).value
                assert unitary_sc_moment(w, freq(mu), freq(mut)) == brute == genfuncs.nonneg_coeff(mu, mut)


def test_orthogonal_symplectic_vs_brute():
    for w in range(0, 6):
        for mu in iterate_partitions(w):
            a = freq(mu)
            assert symplectic_sc_moment(max(w, 1), a) == count(CLASSES["sym-even"], mu).value
            assert orthogonal_sc_moment(max(w, 1), a) == count(CLASSES["sym-zero"], mu).value
            assert orthogonal_free_diag_moment(max(w, 1), a) == count(CLASSES["sym"], mu).value


@pytest.mark.parametrize("chi0, chi1", list(itertools.product((0, 1), repeat=2)))
def test_bisymmetric_routes(chi0, chi1):
    spec = MatrixClassSpec(symmetry=Symmetry.DIAG_ANTIDIAG, chi0=chi0, chi1=chi1)
    for mu in [(1,), (2,), (3,), (1, 1), (2, 1), (1, 2), (2, 2)]:
        brute = count(spec, mu).value
        assert bisymmetric_coeff(0, mu, chi0, chi1) == brute
        assert bisymmetric_coeff(sum(mu), mu, chi0, chi1, "hook") == brute


def test_point_symmetric_routes():
    for mu in [(2,), (4,), (1, 1), (2, 2), (3, 1), (1, 3)]:
        brute = count_point_symmetric(mu)
        assert point_symmetric_coeff(0, mu) == brute
        assert point_symmetric_coeff(sum(mu), mu, method="cauchy") == brute


def test_exact_moment_dispatch():
    r = exact_moment(GroupId("U", 3), MomentSpec((2,), (2,)))
    assert r.value == 2 and r.method == "character-sum"
    o = exact_moment(GroupId("O", 3), MomentSpec((1,)))
    assert o.value == 0 and o.diagnostic
    sp = exact_moment(GroupId("USp", 1), MomentSpec((), (), (1,), ()))
    assert sp.value == 0  # E Tr M vanishes on USp
    assert exact_moment(GroupId("O", 2), MomentSpec((1,), extra=parse_extra("det1plusm"))).value == 1
    assert exact_moment(GroupId("O", 2), MomentSpec((2,), extra=parse_extra("scp:2"))).value == 1
    with pytest.raises(ValueError):
        exact_moment(GroupId("U", 2), MomentSpec((1,), extra="det1plusm"))
    with pytest.raises(ValueError):
        parse_extra("bogus")
    with pytest.raises(ValueError):
        GroupId("SU", 2)


@given(st.lists(st.integers(0, 2), max_size=3), st.lists(st.integers(0, 2), max_size=3))
def test_unitary_moment_symmetric_in_conjugation(a, b):
    N = 6
    assert unitary_sc_moment(N, a, b) == unitary_sc_moment(N, b, a)


@given(st.lists(st.integers(0, 2), max_size=3), st.integers(1, 4))
def test_unitary_moment_monotone_in_N(a, N):
    assert unitary_sc_moment(N, a, a) <= unitary_sc_moment(N + 1, a, a)


@given(st.lists(st.integers(0, 2), max_size=3))
def test_prescribed_diagonals_sum_to_free(a):
    N = 6
    w = sum((j + 1) * x for j, x in enumerate(a))
    assert sum(orthogonal_prescribed_diag_moment(N, a, p) for p in range(w + 1)) == orthogonal_free_diag_moment(N, a)


def test_zero_one_block_and_block_symmetric_vs_brute():
    for w in range(1, 5):
        for mu in iterate_partitions(w):
            for mut in iterate_partitions(w):
                brute = count(CLASSES["zeroone"], mu, mut).value
                assert zero_one_moment(len(mu), freq(mu), freq(mut)) == brute == genfuncs.zero_one_coeff(mu, mut)
    cases = [((1,), (1,), (1,), (1,)), ((1, 1), (2,), (), ()), ((2,), (1,), (), (1,)), ((1,), (), (1,), (2,))]
    for mu, mut, nu, nut in cases:
        brute = count(CLASSES["block"], mu, mut, nu, nut).value
        N = sum(mu) + sum(nu)
        assert mixed_moment(N, freq(mu), freq(mut), freq(nu), freq(nut)) == brute
    for mu, nu in [((1,), (1,)), ((2,), (2,)), ((1, 1), (1,)), ((2,), ())]:
        for variant in ("Sp", "O"):
            brute = count(CLASSES[f"blocksym-{variant.lower()}"], mu, None, nu).value
            N = sum(mu) + sum(nu)
            assert block_symmetric_moment(N, freq(mu), freq(nu), variant) == brute == \
                genfuncs.block_symmetric_coeff(mu, nu, variant)

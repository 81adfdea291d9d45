import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rmtcount.group_moments import GroupId, MomentSpec, exact_moment
from rmtcount.haar import (
    GroupMatrixSample,
    complete_from_elementary,
    elementary_from_roots,
    mc_char_poly_power,
    mc_moment,
    sample,
    sample_matrices,
    secular,
    secular_samples,
    stream,
    within_tolerance,
)

GROUPS = [GroupId("U", 3), GroupId("O", 3), GroupId("O_plus", 2), GroupId("O_minus", 3), GroupId("USp", 2)]


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: f"{g.family}{g.size}")
def test_samples_lie_on_group(group):
    m = sample_matrices(group, 200, stream(1, 0))
    eye = np.eye(group.dim)
    assert np.max(np.abs(np.conj(np.swapaxes(m, 1, 2)) @ m - eye)) < 1e-10
    if group.real:
        assert np.isrealobj(m)
    if group.family == "O_plus":
        assert np.allclose(np.linalg.det(m), 1)
    if group.family == "O_minus":
        assert np.allclose(np.linalg.det(m), -1)
    s = sample(group, stream(2, 0))
    assert s.unitarity_residual() < 1e-10
    if group.family == "USp":
        assert s.symplectic_residual() < 1e-10


def test_u1_mean_is_zero():
    m = sample_matrices(GroupId("U", 1), 10_000, stream(3, 0))[:, 0, 0]
    se = np.std(m.real) / math.sqrt(len(m))
    assert abs(m.real.mean()) < 4 * se + 1e-3 and abs(m.imag.mean()) < 4 * se + 1e-3


def test_identity_secular_coefficients():
    N = 5
    data = secular(GroupMatrixSample(GroupId("U", N), np.eye(N)), pmax=4)
    assert np.allclose(data.sc, [math.comb(N, j) for j in range(N + 1)])
    assert np.allclose(data.rc, [math.comb(N + p - 1, p) for p in range(5)])


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: f"{g.family}{g.size}")
def test_secular_low_orders(group):
    s = sample(group, stream(4, 0))
    d = secular(s)
    tr = np.trace(s.matrix)
    assert np.isclose(d.sc[0], 1) and np.isclose(d.rc[0], 1)
    assert np.isclose(d.sc[1], tr) and np.isclose(d.rc[1], tr)
    # Sc_j from the characteristic polynomial directly
    coeffs = np.poly(s.matrix)  # det(xI - M) = sum (-1)^j Sc_j x^{dim-j}
    assert np.allclose(d.sc, coeffs * (-1) ** np.arange(len(coeffs)))


@given(st.lists(st.floats(-2, 2), min_size=1, max_size=5))
def test_elementary_complete_duality(roots):
    e = elementary_from_roots(np.array(roots, dtype=complex))
    h = complete_from_elementary(e, 5)
    # sum_k (-1)^k e_k h_{p-k} = 0 for p >= 1
    for p in range(1, 6):
        s = sum((-1) ** k * e[k] * h[p - k] for k in range(min(p, len(e) - 1) + 1))
        assert abs(s) < 1e-8 * (1 + max(abs(x) for x in h[: p + 1]))


def test_empty_spec_is_exactly_one():
    r = mc_moment(GroupId("O", 2), MomentSpec(), 500)
    assert r.estimate == 1.0 and r.stderr == 0.0


def test_unitary_trace_moments():
    r = mc_moment(GroupId("U", 3), MomentSpec((1,), (1,)), 10_000, seed=5)
    assert within_tolerance(r.estimate, r.stderr, 1)
    r = mc_moment(GroupId("U", 4), MomentSpec((2,), (2,)), 100_000, seed=6)
    assert within_tolerance(r.estimate, r.stderr, 2)


def test_symplectic_and_orthogonal_moments():
    r = mc_moment(GroupId("USp", 2), MomentSpec((0, 1)), 10_000, seed=7)
    assert within_tolerance(r.estimate, r.stderr, 1)
    g = GroupId("O", 3)
    r = mc_moment(g, MomentSpec((1,)), 10_000, seed=8)
    assert within_tolerance(r.estimate, r.stderr, exact_moment(g, MomentSpec((1,))).value)


def test_results_independent_of_threads():
    g = GroupId("U", 3)
    a = mc_moment(g, MomentSpec((1,), (1,)), 5000, seed=11, threads=1)
    secular_samples.cache_clear()
    b = mc_moment(g, MomentSpec((1,), (1,)), 5000, seed=11, threads=3)
    assert a.estimate == b.estimate and a.stderr == b.stderr


def test_char_poly_power_examples():
    r = mc_char_poly_power(1, 1.0, 1, 1, 20_000)
    assert within_tolerance(r.estimate, r.stderr, 2)
    r = mc_char_poly_power(2, 1.0, 1, 1, 20_000)
    assert within_tolerance(r.estimate, r.stderr, 3)
    r = mc_char_poly_power(1, -1.0, 0, 1, 20_000, group="USp")
    assert within_tolerance(r.estimate, r.stderr, 2)
    with pytest.raises(ValueError):
        mc_char_poly_power(1, 0.5, 1, 1, 1000)


def test_within_tolerance_floor():
    assert within_tolerance(1.0005, 0.0, 1.0)
    assert not within_tolerance(1.01, 0.001, 1.0)


def test_too_few_samples_rejected():
    with pytest.raises(ValueError):
        mc_moment(GroupId("U", 2), MomentSpec((1,), (1,)), 10)

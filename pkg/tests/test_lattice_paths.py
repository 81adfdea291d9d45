import itertools

import pytest
from hypothesis import given, strategies as st

from rmtcount import lattice_paths as lp
from rmtcount.group_moments import symplectic_sc_moment, unitary_sc_moment
from rmtcount.partitions import frequencies, iterate_partitions
from rmtcount.polyring import Caps, MultiPoly
from rmtcount.symfunc import restricted_cauchy_sum


def naive_walks(N, steps, wall=False):
    """Every walker independently stays or steps; keep strictly ordered configurations."""
    layer = {tuple(range(1, N + 1)): 1}
    for direction, movers in steps:
        nxt = {}
        for pos, ways in layer.items():
            for moves in itertools.product((0, 1), repeat=N):
                if sum(moves) != movers:
                    continue
                new = tuple(p + direction * m for p, m in zip(pos, moves))
                if len(set(new)) < N or list(new) != sorted(new) or (wall and min(new) < 1):
                    continue
                nxt[new] = nxt.get(new, 0) + ways
        layer = nxt
    return layer.get(tuple(range(1, N + 1)), 0)


def test_returning_examples():
    assert lp.count_returning(1, 1, (1,), (1,)) == 1
    assert lp.count_returning(2, 2, (1, 1), (1, 1)) == 2
    assert lp.count_returning(2, 1, (1,), ()) == 0


def test_wall_examples():
    assert lp.count_wall(1, 1, (2,)) == 1
    assert lp.count_wall(2, 1, (1,)) == 0
    assert lp.count_wall(3, 2, ()) == 1


def test_lgv_examples():
    assert lp.lgv_generating(1, 1) == MultiPoly(2, {(0, 0): 1, (1, 1): 1})
    for N in (1, 2, 3):
        assert lp.lgv_coefficient(N, 1, (1,), (1,)) == 1
    g = lp.lgv_generating(2, 2)
    beta_free = {e: c for e, c in g.terms.items() if not any(e[2:])}
    assert beta_free == {(0, 0, 0, 0): 1}


@pytest.mark.parametrize("N, n", [(1, 1), (2, 2), (3, 2), (2, 3), (4, 1)])
def test_lgv_equals_restricted_cauchy(N, n):
    caps = Caps(total=2 * n * N)
    assert lp.lgv_generating(N, n, caps) == restricted_cauchy_sum(N, n, n, n * N, caps)


def test_returning_against_naive_and_moments():
    for mu in [(1, 1), (2, 1), (1, 2), (2, 0), (1, 1, 1)]:
        n = len(mu)
        for mut in itertools.permutations(mu):
            N = sum(mu)
            steps = [(1, m) for m in mu] + [(-1, mut[n - 1 - i]) for i in range(n)]
            got = lp.count_returning(N, n, mu, mut)
            assert got == naive_walks(N, steps)
            a = frequencies(sorted([x for x in mu if x], reverse=True))
            b = frequencies(sorted([x for x in mut if x], reverse=True))
            assert got == unitary_sc_moment(N, a, b) == lp.lgv_coefficient(N, n, mu, mut)


def test_wall_against_symplectic_moment():
    for w in range(0, 6):
        for mu in iterate_partitions(w):
            assert lp.count_wall(max(w, 1), len(mu) or 1, mu) == symplectic_sc_moment(max(w, 1), frequencies(mu))


def test_wall_against_naive_split():
    # enumerate the right/left split of each mu_j explicitly
    N, mu = 2, (2, 2)
    total = 0
    for r1, r2 in itertools.product(range(3), repeat=2):
        steps = [(1, r1), (-1, 2 - r1), (1, r2), (-1, 2 - r2)]
        total += naive_walks(N, steps, wall=True)
    assert lp.count_wall(N, 2, mu) == total


@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.permutations([0, 1, 2]), st.integers(1, 3))
def test_returning_time_reversal(mu, perm, N):
    # running the walk backwards swaps the right-moving and left-moving constraints
    mut = [mu[p] for p in perm]
    assert lp.count_returning(N, 3, mu, mut) == lp.count_returning(N, 3, mut, mu)

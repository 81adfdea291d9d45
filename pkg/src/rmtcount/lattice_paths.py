"""Lock-step vicious walkers: transfer-matrix counts and the LGV determinant.

Walkers start at sites 1..N and take simultaneous steps; at every step each
walker either stays or moves one site in the step's direction, and no two
walkers may share a site afterwards.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Sequence

from .polyring import Caps, MultiPoly, det
from .symfunc import elementary


def _moves(pos: tuple[int, ...], direction: int, movers: int):
    """Configurations reachable from ``pos`` with exactly ``movers`` walkers stepping."""
    for idx in itertools.combinations(range(len(pos)), movers):
        new = list(pos)
        for i in idx:
            new[i] += direction
        if new and new[0] < 1:
            continue
        if all(new[i] < new[i + 1] for i in range(len(new) - 1)):
            yield tuple(new)


def _run(start: tuple[int, ...], steps: Sequence[tuple[int, int]]) -> Counter:
    """Propagate a configuration through ``(direction, movers)`` steps."""
    layer = Counter({start: 1})
    for direction, movers in steps:
        nxt: Counter = Counter()
        for pos, ways in layer.items():
            for new in _moves(pos, direction, movers):
                nxt[new] += ways
        layer = nxt
    return layer


def _pad(v: Sequence[int], n: int) -> list[int]:
    v = list(v)
    if len(v) > n:
        raise ValueError(f"{v} has more than {n} parts")
    return v + [0] * (n - len(v))


def count_returning(N: int, n: int, mu: Sequence[int], mutilde: Sequence[int]) -> int:
    """Configurations of N walkers over 2n steps that return to 1..N.

    Steps 1..n move right with ``mu_j`` movers at step j; step ``2n + 1 - j``
    moves left with ``mutilde_j`` movers.
    """
    mu, mutilde = _pad(mu, n), _pad(mutilde, n)
    if sum(mu) != sum(mutilde):
        return 0
    steps = [(1, m) for m in mu] + [(-1, mutilde[n - 1 - i]) for i in range(n)]
    start = tuple(range(1, N + 1))
    return _run(start, steps)[start]


def count_wall(N: int, n: int, mu: Sequence[int]) -> int:
    """Walkers above a wall at site 1: odd steps right, even steps left.

    The right movers at step ``2j - 1`` plus the left movers at step ``2j``
    total ``mu_j``.
    """
    mu = _pad(mu, n)
    start = tuple(range(1, N + 1))
    layer = Counter({start: 1})
    for m in mu:
        nxt: Counter = Counter()
        for r in range(min(m, N) + 1):
            if m - r > N:
                continue
            for pos, ways in layer.items():
                for mid in _moves(pos, 1, r):
                    for new in _moves(mid, -1, m - r):
                        nxt[new] += ways
        layer = nxt
    return layer[start]


def kernel(d: int, n: int, caps: Caps) -> MultiPoly:
    """Coefficient of ``z^d`` in ``prod_m (1 + alpha_m / z)(1 + beta_m z)``.

    Variables ``alpha_1..alpha_n, beta_1..beta_n``;
    it equals ``sum_{s - r = d} e_r(alpha) e_s(beta)``.
    """
    nv = 2 * n
    alphas, betas = list(range(n)), list(range(n, 2 * n))
    acc = MultiPoly(nv, {}, caps)
    for r in range(n + 1):
        s = r + d
        if 0 <= s <= n:
            acc = acc + elementary(r, alphas, nv, caps) * elementary(s, betas, nv, caps)
    return acc


def lgv_generating(N: int, n: int, caps: Caps | None = None) -> MultiPoly:
    """``det[g(j; k)]_{j,k = 1..N}`` where ``g(j; k)`` is the ``z^{k - j}`` kernel coefficient."""
    if caps is None:
        caps = Caps(total=2 * n * N)
    matrix = [[kernel(k - j, n, caps) for k in range(N)] for j in range(N)]
    return det(matrix)


def lgv_coefficient(N: int, n: int, mu: Sequence[int], mutilde: Sequence[int]) -> int:
    """Coefficient of ``alpha^mu beta^mutilde`` in ``lgv_generating``, truncated per variable."""
    exps = tuple(_pad(mu, n) + _pad(mutilde, n))
    caps = Caps(degree=exps, total=sum(exps))
    return lgv_generating(N, n, caps).coefficient(exps)

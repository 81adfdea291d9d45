"""Product generating functions for the matrix families, expanded with polyring.

Each ``*_coeff`` function expands the relevant product only up to the
exponents being queried (per-variable caps), then reads one coefficient.
"""

from __future__ import annotations

from collections.abc import Sequence

from .polyring import Caps, Factor, MultiPoly, expand_factor_product


def _unit(nv: int, *idx: int) -> tuple[int, ...]:
    e = [0] * nv
    for i in idx:
        e[i] += 1
    return tuple(e)


def _geom(nv: int, *idx: int) -> Factor:
    """``1 / (1 - prod x_idx)``"""
    return Factor(-1, _unit(nv, *idx), -1)


def _plus(nv: int, *idx: int) -> Factor:
    """``1 + prod x_idx``"""
    return Factor(1, _unit(nv, *idx), 1)


def _coeff(factors: list[Factor], exps: Sequence[int]) -> int:
    exps = tuple(exps)
    caps = Caps(degree=exps, total=sum(exps))
    return expand_factor_product(factors, len(exps), caps).coefficient(exps)


def cauchy_factors(m: int, n: int) -> list[Factor]:
    """``prod_{i,j} 1/(1 - alpha_i beta_j)``, variables alpha then beta."""
    nv = m + n
    return [_geom(nv, i, m + j) for i in range(m) for j in range(n)]


def nonneg_coeff(mu: Sequence[int], mutilde: Sequence[int]) -> int:
    m, n = len(mu), len(mutilde)
    return _coeff(cauchy_factors(m, n), list(mu) + list(mutilde))


def zero_one_coeff(mu: Sequence[int], mutilde: Sequence[int]) -> int:
    m, n = len(mu), len(mutilde)
    nv = m + n
    factors = [_plus(nv, i, m + j) for i in range(m) for j in range(n)]
    return _coeff(factors, list(mu) + list(mutilde))


def symmetric_zero_diag_coeff(mu: Sequence[int]) -> int:
    n = len(mu)
    return _coeff([_geom(n, i, j) for i in range(n) for j in range(i + 1, n)], mu)


def symmetric_even_diag_coeff(mu: Sequence[int]) -> int:
    n = len(mu)
    return _coeff([_geom(n, i, j) for i in range(n) for j in range(i, n)], mu)


def symmetric_free_diag_coeff(mu: Sequence[int]) -> int:
    n = len(mu)
    factors = [_geom(n, i) for i in range(n)] + [_geom(n, i, j) for i in range(n) for j in range(i + 1, n)]
    return _coeff(factors, mu)


def symmetric_prescribed_diag_coeff(mu: Sequence[int], p: int) -> int:
    """Coefficient of ``t^p q^mu`` in ``1/(prod(1 - t q_i) prod_{i<j}(1 - q_i q_j))``; t is variable 0."""
    n = len(mu)
    nv = n + 1
    factors = [_geom(nv, 0, 1 + i) for i in range(n)]
    factors += [_geom(nv, 1 + i, 1 + j) for i in range(n) for j in range(i + 1, n)]
    return _coeff(factors, [p] + list(mu))


def bisymmetric_factors(n: int, chi0: int, chi1: int) -> list[Factor]:
    """``prod (1 + chi1 q_i)/(1 - chi0 q_i) * prod_{i,j} 1/(1 - q_i q_j)``."""
    factors = []
    for i in range(n):
        if chi1:
            factors.append(_plus(n, i))
        if chi0:
            factors.append(_geom(n, i))
    for i in range(n):
        for j in range(n):
            factors.append(_geom(n, i, j))
    return factors


def bisymmetric_genfunc_coeff(mu: Sequence[int], chi0: int, chi1: int) -> int:
    return _coeff(bisymmetric_factors(len(mu), chi0, chi1), mu)


def point_symmetric_genfunc_coeff(mu: Sequence[int], mutilde: Sequence[int] | None = None) -> int:
    """Coefficient of ``q^mu`` in ``prod_{i,j}(1 - q_i q_j)^-2``.

    With ``mutilde`` the unspecialized form ``prod_{i,j}(1 - alpha_i beta_j)^-2``
    is used and ``alpha^mu beta^mutilde`` is read.
    """
    n = len(mu)
    if mutilde is None:
        factors = [Factor(-1, _unit(n, i, j), -2) for i in range(n) for j in range(n)]
        return _coeff(factors, mu)
    factors = [Factor(-1, _unit(2 * n, i, n + j), -2) for i in range(n) for j in range(n)]
    return _coeff(factors, list(mu) + list(mutilde))


def block_coeff(mu: Sequence[int], mutilde: Sequence[int], nu: Sequence[int], nutilde: Sequence[int]) -> int:
    """Coefficient of ``alpha^mu beta^nu gamma^mutilde delta^nutilde`` in the block-matrix product.

    ``alpha``/``beta`` index the rows of (A,B)/(C,D); ``gamma``/``delta`` the
    columns of (A,C)/(B,D).
    """
    k1, l1, k2, l2 = len(mu), len(nu), len(mutilde), len(nutilde)
    a0, b0, g0, d0 = 0, k1, k1 + l1, k1 + l1 + k2
    nv = d0 + l2
    factors = [_geom(nv, a0 + i, g0 + j) for i in range(k1) for j in range(k2)]
    factors += [_geom(nv, b0 + i, d0 + j) for i in range(l1) for j in range(l2)]
    factors += [_plus(nv, a0 + i, d0 + j) for i in range(k1) for j in range(l2)]
    factors += [_plus(nv, b0 + i, g0 + j) for i in range(l1) for j in range(k2)]
    return _coeff(factors, list(mu) + list(nu) + list(mutilde) + list(nutilde))


def block_symmetric_coeff(mu: Sequence[int], nu: Sequence[int], variant: str) -> int:
    """Coefficient of ``alpha^mu beta^nu`` in ``G^Sp`` or ``G^O``.

    The 0-1 block couples every alpha with every beta.
    """
    k, l = len(mu), len(nu)
    nv = k + l
    a_diag = variant == "Sp"
    factors = [_geom(nv, i, j) for i in range(k) for j in range(i if a_diag else i + 1, k)]
    factors += [_geom(nv, k + i, k + j) for i in range(l) for j in range(i + 1 if a_diag else i, l)]
    factors += [_plus(nv, i, k + j) for i in range(k) for j in range(l)]
    return _coeff(factors, list(mu) + list(nu))


def block_genfunc(k1: int, l1: int, k2: int, l2: int, caps: Caps) -> MultiPoly:
    """The whole block-matrix product in variables alpha, beta, gamma, delta."""
    a0, b0, g0, d0 = 0, k1, k1 + l1, k1 + l1 + k2
    nv = d0 + l2
    factors = [_geom(nv, a0 + i, g0 + j) for i in range(k1) for j in range(k2)]
    factors += [_geom(nv, b0 + i, d0 + j) for i in range(l1) for j in range(l2)]
    factors += [_plus(nv, a0 + i, d0 + j) for i in range(k1) for j in range(l2)]
    factors += [_plus(nv, b0 + i, g0 + j) for i in range(l1) for j in range(k2)]
    return expand_factor_product(factors, nv, caps)

"""Schur-type symmetric functions over truncated polynomial rings."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from functools import lru_cache

from .partitions import Partition, iterate_partitions
from .polyring import Caps, MultiPoly, det


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content):
        return 0
    last = content[-1]
    rest = content[:-1]
    total = 0
    # peel a horizontal strip of size `last`: lam_{i+1} <= nu_i <= lam_i
    n = len(shape)

    def strips(i: int, removed: int, nu: list[int]):
        nonlocal total
        if i == n:
            if removed == last:
                total += _kostka(Partition(p for p in nu if p), rest)
            return
        lo = shape[i + 1] if i + 1 < n else 0
        for v in range(shape[i], lo - 1, -1):
            r = removed + shape[i] - v
            if r > last:
                break
            nu.append(v)
            strips(i + 1, r, nu)
            nu.pop()

    strips(0, 0, [])
    return total


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content.

    ``content`` may be any composition; Kostka numbers are symmetric in its order.
    """
    shape = Partition(shape)
    if sum(shape) != sum(content):
        return 0
    key = tuple(sorted((c for c in content if c), reverse=True))
    return _kostka(shape, key)


def _unit(nvars: int, i: int) -> tuple[int, ...]:
    e = [0] * nvars
    e[i] = 1
    return tuple(e)


@lru_cache(maxsize=None)
def _h_terms(k: int, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    if k < 0:
        return ()
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append((tuple(e), 1))
    return tuple(out)


def complete_homogeneous(k: int, variables: Sequence[int], nvars: int, caps: Caps) -> MultiPoly:
    """``h_k`` in the ring variables listed in ``variables``."""
    terms = {}
    for e, c in _h_terms(k, len(variables)):
        full = [0] * nvars
        for idx, x in zip(variables, e):
            full[idx] = x
        terms[tuple(full)] = c
    return MultiPoly(nvars, terms, caps)


def elementary(k: int, variables: Sequence[int], nvars: int, caps: Caps) -> MultiPoly:
    """``e_k`` in the ring variables listed in ``variables``."""
    terms = {}
    if k >= 0:
        for combo in itertools.combinations(variables, k):
            full = [0] * nvars
            for idx in combo:
                full[idx] = 1
            terms[tuple(full)] = 1
    return MultiPoly(nvars, terms, caps)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def _schur_cached(shape: Partition, n: int, caps: Caps, method: str) -> MultiPoly:
    if len(shape) > n:
        return MultiPoly(n, {}, caps)
    if method == "tableau":
        terms = {}
        for comp in _compositions(sum(shape), n):
            k = kostka(shape, comp)
            if k:
                terms[comp] = k
        return MultiPoly(n, terms, caps)
    if method != "jacobi-trudi":
        raise ValueError(f"unknown method {method!r}")
    if not shape:
        return MultiPoly.constant(n, 1, caps)
    ell = len(shape)
    variables = list(range(n))
    matrix = [
        [complete_homogeneous(shape[i] - i + j, variables, n, caps) for j in range(ell)]
        for i in range(ell)
    ]
    return det(matrix)


def schur_poly(shape: Sequence[int], n: int, caps: Caps | None = None, method: str = "jacobi-trudi") -> MultiPoly:
    """Schur polynomial ``s_shape(x_1..x_n)``.

    The default route is the Jacobi-Trudi determinant ``det(h_{shape_i - i + j})``;
    ``method="tableau"`` builds it from Kostka numbers instead, which is the
    cross-check used in the tests.
    """
    shape = Partition(shape)
    if caps is None:
        caps = Caps(total=sum(shape))
    return _schur_cached(shape, n, caps, method)


def embed(f: MultiPoly, offset: int, nvars: int, caps: Caps) -> MultiPoly:
    """Place ``f`` into a bigger ring, its variables starting at ``offset``."""
    images = [(1, _unit(nvars, offset + i)) for i in range(f.nvars)]
    return f.specialize(images, nvars).with_caps(caps)


def hook_series_coefficients(kmax: int, k: int, l: int, caps: Caps) -> list[MultiPoly]:
    """``a_0..a_kmax``: coefficients of ``x^j`` in ``prod(1+beta x)/prod(1-alpha x)``.

    Ring variables are ``alpha_1..alpha_k, beta_1..beta_l`` in that order.
    """
    nv = k + l
    alphas = list(range(k))
    betas = list(range(k, k + l))
    out = []
    for j in range(kmax + 1):
        acc = MultiPoly(nv, {}, caps)
        for r in range(0, min(j, l) + 1):
            acc = acc + complete_homogeneous(j - r, alphas, nv, caps) * elementary(r, betas, nv, caps)
        out.append(acc)
    return out


def hook_schur(shape: Sequence[int], k: int, l: int, caps: Caps | None = None, index: str = "standard") -> MultiPoly:
    """Hook Schur function ``HS_shape(alpha_1..alpha_k; beta_1..beta_l)``.

    ``index="standard"`` uses ``det(a_{shape_i - i + j})``.  ``index="printed"``
    uses ``det(a_{shape_i + j - 1})``; it is kept only so the tests can show it
    fails the generalized Cauchy identity.
    """
    shape = Partition(shape)
    if caps is None:
        caps = Caps(total=sum(shape))
    nv = k + l
    if not shape:
        return MultiPoly.constant(nv, 1, caps)
    ell = len(shape)
    if index == "standard":
        idx = lambda i, j: shape[i] - i + j  # noqa: E731
    elif index == "printed":
        idx = lambda i, j: shape[i] + j  # noqa: E731  (0-based j: lam_i + (j+1) - 1)
    else:
        raise ValueError(f"unknown index convention {index!r}")
    kmax = max(idx(i, j) for i in range(ell) for j in range(ell))
    a = hook_series_coefficients(max(kmax, 0), k, l, caps)
    zero = MultiPoly(nv, {}, caps)
    matrix = [[a[idx(i, j)] if idx(i, j) >= 0 else zero for j in range(ell)] for i in range(ell)]
    return det(matrix)


def in_hook(shape: Sequence[int], k: int, l: int) -> bool:
    """``HS_shape(k; l)`` is nonzero iff the diagram fits in the (k, l)-hook."""
    return len(shape) <= k or shape[k] <= l


@lru_cache(maxsize=None)
def _hook_coeff(shape: Partition, mu: tuple[int, ...], nu: tuple[int, ...], index: str) -> int:
    k, l = len(mu), len(nu)
    if not in_hook(shape, k, l) and index == "standard":
        return 0
    caps = Caps(degree=mu + nu, total=sum(shape))
    hs = hook_schur(shape, k, l, caps, index=index)
    return hs.coefficient(mu + nu)


def hook_schur_coeff(shape: Sequence[int], k: int, l: int, mu: Sequence[int], nu: Sequence[int], index: str = "standard") -> int:
    """Coefficient of ``alpha^mu beta^nu`` in ``HS_shape(alpha_1..alpha_k; beta_1..beta_l)``."""
    shape = Partition(shape)
    if len(mu) > k or len(nu) > l:
        raise ValueError("exponent vectors longer than the variable sets")
    if sum(shape) != sum(mu) + sum(nu):
        return 0
    # the coefficient only depends on the nonzero exponents: drop idle variables
    mu_t = tuple(x for x in mu if x)
    nu_t = tuple(x for x in nu if x)
    return _hook_coeff(shape, mu_t, nu_t, index)


def restricted_cauchy_sum(N: int, m: int, n: int, degree_cap: int, caps: Caps | None = None) -> MultiPoly:
    """``sum_{kappa_1 <= N, |kappa| <= cap} s_kappa(alpha_1..alpha_m) s_kappa(beta_1..beta_n)``.

    Ring variables: ``alpha_1..alpha_m, beta_1..beta_n``.  ``caps`` optionally
    truncates further (per-variable bounds make single-coefficient queries cheap).
    """
    nv = m + n
    if caps is None:
        caps = Caps(total=2 * degree_cap)
    acc = MultiPoly(nv, {}, caps)
    for w in range(degree_cap + 1):
        for kappa in iterate_partitions(w, max_part=N, max_length=min(m, n)):
            sa = schur_poly(kappa, m, Caps(total=w)) if m else MultiPoly.constant(0, 1)
            sb = schur_poly(kappa, n, Caps(total=w)) if n else MultiPoly.constant(0, 1)
            acc = acc + outer_product(sa, sb, caps)
    return acc


def outer_product(a: MultiPoly, b: MultiPoly, caps: Caps) -> MultiPoly:
    """Product of polynomials in disjoint variable blocks (a's first)."""
    terms = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = ea + eb
            if caps.admits(e):
                terms[e] = terms.get(e, 0) + ca * cb
    return MultiPoly(a.nvars + b.nvars, terms, caps)


def rect_schur_check(m: int, n: int, N: int, caps: Caps | None = None) -> MultiPoly:
    """``s_{N^n}(alpha_1..alpha_m, beta_1..beta_n)`` in ``m + n`` variables."""
    shape = Partition([N] * n)
    return schur_poly(shape, m + n, caps)


def littlewood_sum(n: int, degree_cap: int, condition: str, max_part: int | None = None, max_length: int | None = None) -> MultiPoly:
    """``sum s_lambda(x_1..x_n)`` over ``lambda`` passing ``condition``."""
    from .partitions import is_conjugate_even, is_even

    test = {"even": is_even, "conjugate-even": is_conjugate_even, "all": lambda lam: True}[condition]
    caps = Caps(total=degree_cap)
    acc = MultiPoly(n, {}, caps)
    for w in range(degree_cap + 1):
        for lam in iterate_partitions(w, max_part=max_part, max_length=n if max_length is None else min(n, max_length)):
            if test(lam):
                acc = acc + schur_poly(lam, n, caps)
    return acc

"""Haar sampling on the classical compact groups, and Monte Carlo group averages.

Samples are drawn in fixed-size chunks; chunk ``c`` uses its own Philox
stream derived from ``(seed, c)``, so an estimate depends only on the seed and
the sample count, never on the number of worker threads.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .group_moments import GroupId, MomentSpec
from .matrix_enum import CountResult

log = logging.getLogger(__name__)

CHUNK = 2000


def stream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for substream ``index`` of ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


def symplectic_form(N: int) -> np.ndarray:
    J = np.zeros((2 * N, 2 * N))
    J[:N, N:] = np.eye(N)
    J[N:, :N] = -np.eye(N)
    return J


# --- samplers --------------------------------------------------------------

def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def sample_unitary(count: int, N: int, rng: np.random.Generator) -> np.ndarray:
    z = _complex_gaussian(rng, (count, N, N))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def sample_orthogonal(count: int, N: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((count, N, N))
    q, r = np.linalg.qr(z)
    d = np.sign(np.diagonal(r, axis1=-2, axis2=-1))
    d[d == 0] = 1.0
    return q * d[:, None, :]


def sample_symplectic(count: int, N: int, rng: np.random.Generator) -> np.ndarray:
    """Unitary symplectic matrices ``M^T J M = J`` by structured Gram-Schmidt.

    Column ``k`` is a Gaussian vector orthonormalized against all previous
    columns; column ``N + k`` is its partner ``-J conj(u_k)``.  The span of the
    finished columns is closed under ``v -> J conj(v)``, so each new vector is
    uniform on the sphere of a quaternionic complement and the result is Haar.
    """
    dim = 2 * N
    J = symplectic_form(N)
    M = np.zeros((count, dim, dim), dtype=complex)
    for k in range(N):
        v = _complex_gaussian(rng, (count, dim))
        for _ in range(2):  # second pass for numerical orthogonality
            for j in list(range(k)) + list(range(N, N + k)):
                col = M[:, :, j]
                v = v - np.einsum("si,si->s", col.conj(), v)[:, None] * col
        norm = np.linalg.norm(v, axis=1)
        if np.any(norm < 1e-12):
            raise np.linalg.LinAlgError("rank-deficient symplectic draw")
        u = v / norm[:, None]
        M[:, :, k] = u
        M[:, :, N + k] = -(J @ u.conj().T).T
    return M


def sample_matrices(group: GroupId, count: int, rng: np.random.Generator) -> np.ndarray:
    N = group.size
    if group.family == "U":
        return sample_unitary(count, N, rng)
    if group.family == "USp":
        return sample_symplectic(count, N, rng)
    m = sample_orthogonal(count, N, rng)
    if group.family in ("O_plus", "O_minus"):
        # flipping one column is a Haar-preserving bijection between the two cosets
        want = 1.0 if group.family == "O_plus" else -1.0
        flip = np.sign(np.linalg.det(m)) != want
        m[flip, :, 0] *= -1.0
    return m


@dataclass
class GroupMatrixSample:
    group: GroupId
    matrix: np.ndarray

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.matrix)

    @property
    def eigenphases(self) -> np.ndarray:
        return np.angle(self.eigenvalues)

    def unitarity_residual(self) -> float:
        m = self.matrix
        return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))

    def symplectic_residual(self) -> float:
        J = symplectic_form(self.group.size)
        return float(np.max(np.abs(self.matrix.T @ J @ self.matrix - J)))


def sample(group: GroupId, rng: np.random.Generator) -> GroupMatrixSample:
    """A single Haar draw; resamples on the (probability zero) rank-deficient event."""
    while True:
        try:
            return GroupMatrixSample(group, sample_matrices(group, 1, rng)[0])
        except np.linalg.LinAlgError:
            log.warning("rank-deficient draw for %s, resampling", group)


# --- secular coefficients ----------------------------------------------------

@dataclass
class SecularData:
    sc: np.ndarray  # Sc_0..Sc_dim
    rc: np.ndarray  # Rc_0..Rc_pmax


def elementary_from_roots(eigs: np.ndarray) -> np.ndarray:
    """``e_0..e_dim`` along the last axis by expanding ``prod(1 + lambda_i x)``."""
    dim = eigs.shape[-1]
    e = np.zeros(eigs.shape[:-1] + (dim + 1,), dtype=complex)
    e[..., 0] = 1.0
    for i in range(dim):
        lam = eigs[..., i : i + 1]
        e[..., 1 : i + 2] = e[..., 1 : i + 2] + lam * e[..., 0 : i + 1]
    return e


def complete_from_elementary(e: np.ndarray, pmax: int) -> np.ndarray:
    """``h_0..h_pmax`` from ``sum_k (-1)^k e_k h_{p-k} = 0``."""
    dim = e.shape[-1] - 1
    h = np.zeros(e.shape[:-1] + (pmax + 1,), dtype=complex)
    h[..., 0] = 1.0
    for p in range(1, pmax + 1):
        acc = np.zeros(e.shape[:-1], dtype=complex)
        for k in range(1, min(p, dim) + 1):
            acc += (-1) ** (k - 1) * e[..., k] * h[..., p - k]
        h[..., p] = acc
    return h


def secular(s: GroupMatrixSample, pmax: int = 6) -> SecularData:
    e = elementary_from_roots(s.eigenvalues)
    return SecularData(e, complete_from_elementary(e, pmax))


def _chunk_secular(group: GroupId, seed: int, index: int, size: int, pmax: int):
    rng = stream(seed, index)
    while True:
        try:
            m = sample_matrices(group, size, rng)
            break
        except np.linalg.LinAlgError:
            log.warning("rank-deficient draw in chunk %d, redrawing the chunk", index)
    e = elementary_from_roots(np.linalg.eigvals(m))
    return e, complete_from_elementary(e, pmax)


@lru_cache(maxsize=32)
def secular_samples(group: GroupId, num_samples: int, seed: int, pmax: int = 6, threads: int = 1):
    """``(sc, rc)`` arrays of shape ``(num_samples, dim+1)`` and ``(num_samples, pmax+1)``."""
    sizes = [CHUNK] * (num_samples // CHUNK)
    if num_samples % CHUNK:
        sizes.append(num_samples % CHUNK)
    jobs = [(group, seed, i, n, pmax) for i, n in enumerate(sizes)]
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda a: _chunk_secular(*a), jobs))
    else:
        parts = [_chunk_secular(*a) for a in jobs]
    sc = np.concatenate([p[0] for p in parts])
    rc = np.concatenate([p[1] for p in parts])
    sc.setflags(write=False)
    rc.setflags(write=False)
    return sc, rc


# --- Monte Carlo averages -----------------------------------------------------

def _exp_product(values: np.ndarray, freqs, column, conj: bool) -> np.ndarray:
    for j, a in enumerate(freqs, start=1):
        if a:
            col = column(j)
            values = values * (np.conj(col) if conj else col) ** a
    return values


def moment_integrand(spec: MomentSpec, sc: np.ndarray, rc: np.ndarray) -> np.ndarray:
    n = sc.shape[0]
    dim = sc.shape[1] - 1
    zeros = np.zeros(n, dtype=complex)

    def sc_col(j):
        return sc[:, j] if j <= dim else zeros

    def rc_col(j):
        if j >= rc.shape[1]:
            raise ValueError(f"Rc_{j} exceeds the precomputed range; raise pmax")
        return rc[:, j]

    v = np.ones(n, dtype=complex)
    v = _exp_product(v, spec.sc, sc_col, False)
    v = _exp_product(v, spec.conj_sc, sc_col, True)
    v = _exp_product(v, spec.rc, rc_col, False)
    v = _exp_product(v, spec.conj_rc, rc_col, True)
    if spec.extra == "det1plusm":
        v = v * sc.sum(axis=1)
    elif isinstance(spec.extra, tuple):
        v = v * sc_col(int(spec.extra[1]))
    return v


def summarize(values: np.ndarray) -> tuple[float, float, float, float]:
    """Mean and standard error of real and imaginary parts, with exact-sum reductions."""
    n = len(values)
    out = []
    for part in (values.real, values.imag):
        s = math.fsum(part)
        mean = s / n
        var = math.fsum((part - mean) ** 2) / (n - 1) if n > 1 else 0.0
        out.append((mean, math.sqrt(var / n)))
    return out[0][0], out[0][1], out[1][0], out[1][1]


def mc_moment(group: GroupId, spec: MomentSpec, num_samples: int = 10_000, seed: int = 42, threads: int = 1) -> CountResult:
    if num_samples < 100:
        raise ValueError("use at least 100 samples")
    pmax = max(6, len(spec.rc), len(spec.conj_rc))
    params = {"group": group.family, "N": group.size, "sc": list(spec.sc), "csc": list(spec.conj_sc),
              "rc": list(spec.rc), "crc": list(spec.conj_rc), "samples": num_samples, "seed": seed}
    if spec.is_empty():
        return CountResult("monte-carlo", params, estimate=1.0, stderr=0.0, estimate_im=0.0, stderr_im=0.0)
    sc, rc = secular_samples(group, num_samples, seed, pmax, threads)
    re, se_re, im, se_im = summarize(moment_integrand(spec, sc, rc))
    return CountResult("monte-carlo", params, estimate=re, stderr=se_re, estimate_im=im, stderr_im=se_im)


def charpoly_values(group: GroupId, z: complex, num_samples: int, seed: int, threads: int = 1) -> np.ndarray:
    """``det(I - z M) = sum_j (-z)^j Sc_j`` for each sample."""
    sc, _ = secular_samples(group, num_samples, seed, 6, threads)
    powers = (-z) ** np.arange(sc.shape[1])
    return sc @ powers


def mc_char_poly_power(c: int, z: complex, b: int, a: int, num_samples: int = 20_000, seed: int = 42,
                       threads: int = 1, group: str = "U") -> CountResult:
    """Monte Carlo estimate of a characteristic-polynomial power.

    ``group="U"``: ``E_{U(c)} det(I - zM)^b conj(det(I - zM))^a``.
    ``group="USp"``: ``E_{USp(2c)} det(I + M)^a``.
    ``group="O"``: ``E_{O(c)} det(I + M)^(a+1)``.
    """
    if group == "U":
        if abs(abs(z) - 1) > 1e-12:
            raise ValueError("z must lie on the unit circle")
        p = charpoly_values(GroupId("U", c), z, num_samples, seed, threads)
        vals = p**b * np.conj(p) ** a
    elif group == "USp":
        vals = charpoly_values(GroupId("USp", c), -1, num_samples, seed, threads) ** a
    elif group == "O":
        vals = charpoly_values(GroupId("O", c), -1, num_samples, seed, threads) ** (a + 1)
    else:
        raise ValueError(f"unknown group {group!r}")
    re, se_re, im, se_im = summarize(vals)
    params = {"group": group, "c": c, "z": [float(np.real(z)), float(np.imag(z))], "a": a, "b": b,
              "samples": num_samples, "seed": seed}
    return CountResult("monte-carlo", params, estimate=re, stderr=se_re, estimate_im=im, stderr_im=se_im)


def within_tolerance(estimate: float, stderr: float, exact: float, k: float = 4.0, floor: float = 1e-3) -> bool:
    return abs(estimate - exact) <= k * stderr + floor

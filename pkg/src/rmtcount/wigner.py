"""Expected characteristic polynomials of Wigner-type random matrices.

Closed forms use monic Hermite and Laguerre polynomials with exact rational
coefficients.  The oracle expands ``det(lambda I - X)`` over permutations and
replaces every product of entries by its expectation; only means and second
moments survive, and any higher moment is carried as a symbol that must
cancel.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .haar import stream, summarize
from .matrix_enum import CountResult

KINDS = ("hermitian", "chiral", "wishart")


# --- orthogonal polynomials ------------------------------------------------------

def hermite_monic_coeffs(n: int) -> list[int]:
    """Ascending coefficients of ``h_n`` with ``h_{k+1} = x h_k - k h_{k-1}``."""
    prev, cur = [], [1]
    for k in range(n):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= k * c
        prev, cur = cur, nxt
    return cur


def laguerre_coeffs(p: int, a: int) -> list[Fraction]:
    """Ascending coefficients of ``L_p^a(x) = sum_k (-1)^k C(p+a, p-k) x^k / k!``."""
    return [Fraction((-1) ** k * math.comb(p + a, p - k), math.factorial(k)) for k in range(p + 1)]


def _horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def hermite_monic(n: int, x):
    return _horner(hermite_monic_coeffs(n), x)


def laguerre(p: int, a: int, x):
    return _horner(laguerre_coeffs(p, a), x)


# --- polynomials in lambda and sigma ------------------------------------------------

class LSPoly(dict):
    """``{(i, j): c}`` meaning ``c * lambda^i * sigma^j`` with exact coefficients."""

    def clean(self) -> "LSPoly":
        return LSPoly({k: v for k, v in self.items() if v})

    def __neg__(self):
        return LSPoly({k: -v for k, v in self.items()})

    def evaluate(self, lam: float, sigma: float) -> float:
        return float(sum(float(c) * lam**i * sigma**j for (i, j), c in self.items()))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for (i, j), c in sorted(self.items(), key=lambda t: (-t[0][0], t[0][1])):
            mono = "*".join(s for s in (f"lambda^{i}" if i else "", f"sigma^{j}" if j else "") if s)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts).replace("+ -", "- ")


def hermitian_closed_poly(N: int) -> LSPoly:
    """``sigma^N h_N(lambda / sigma)``."""
    return LSPoly({(k, N - k): c for k, c in enumerate(hermite_monic_coeffs(N)) if c})


def unsigned_wishart_poly(n: int, p: int) -> LSPoly:
    """``p! sigma^{2p} L_p^{n-p}(lambda / sigma^2)``."""
    out = LSPoly()
    for k, c in enumerate(laguerre_coeffs(p, n - p)):
        v = c * math.factorial(p)
        if v:
            out[(k, 2 * p - 2 * k)] = int(v) if v.denominator == 1 else v
    return out


def unsigned_chiral_poly(n: int, p: int) -> LSPoly:
    """``p! sigma^{2p} lambda^{n-p} L_p^{n-p}((lambda / sigma)^2)``."""
    return LSPoly({(n - p + 2 * i, j): c for (i, j), c in unsigned_wishart_poly(n, p).items()})


def sign_law(n: int, p: int) -> int:
    return (-1) ** p


def chiral_closed_poly(n: int, p: int) -> LSPoly:
    s = sign_law(n, p)
    return LSPoly({k: s * v for k, v in unsigned_chiral_poly(n, p).items()})


def wishart_closed_poly(n: int, p: int) -> LSPoly:
    s = sign_law(n, p)
    return LSPoly({k: s * v for k, v in unsigned_wishart_poly(n, p).items()})


def _check_sizes(n: int, p: int) -> None:
    if not n >= p >= 0:
        raise ValueError("need n >= p >= 0")


def expected_charpoly_hermitian(N: int, sigma2: float, lam: float) -> float:
    return sigma2**N * hermite_monic(N, lam / sigma2)


def expected_charpoly_chiral(n: int, p: int, sigma: float, lam: float) -> float:
    _check_sizes(n, p)
    return sign_law(n, p) * math.factorial(p) * sigma ** (2 * p) * lam ** (n - p) * laguerre(p, n - p, (lam / sigma) ** 2)


def expected_charpoly_wishart(n: int, p: int, sigma: float, lam: float) -> float:
    _check_sizes(n, p)
    return sign_law(n, p) * math.factorial(p) * sigma ** (2 * p) * laguerre(p, n - p, lam / sigma**2)


# --- permutation expansion oracle --------------------------------------------------

def _parity(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _moment(kind: str, a: int, b: int):
    """Expectation of ``x^a conj(x)^b`` for one entry: ``(coeff, sigma_power, symbol)``.

    Zero mean kills single factors; ``E|x|^2 = sigma^2``; anything higher is
    returned as a named symbol.
    """
    if kind == "diag":
        if a == 0:
            return 1, 0, None
        if a == 1:
            return 0, 0, None
        return 1, 0, f"d{a}"
    if (a, b) == (0, 0):
        return 1, 0, None
    if a + b == 1:
        return 0, 0, None
    if (a, b) == (1, 1):
        return 1, 2, None
    return 1, 0, f"m{a},{b}"


@dataclass
class OracleResult:
    poly: LSPoly
    residual_symbols: dict  # symbolic terms that failed to cancel (empty on success)


def _expectation(entries: Counter):
    """``(coeff, sigma_power, symbols)`` for a product of entries described by key counts."""
    coeff, spow, syms = 1, 0, []
    pair: dict = defaultdict(lambda: [0, 0])
    for (key, conj), k in entries.items():
        pair[key][1 if conj else 0] += k
    for key, (a, b) in pair.items():
        c, s, sym = _moment("diag" if key[0] == "d" else "off", a, b)
        if c == 0:
            return 0, 0, ()
        coeff *= c
        spow += s
        if sym:
            syms.append(sym)
    return coeff, spow, tuple(sorted(syms))


def _expand(dim: int, entry: Callable[[int, int], list]) -> OracleResult:
    """Sum over permutations of ``sign * prod_l (lambda delta - X_{l,P(l)})``.

    ``entry(r, c)`` lists the terms of ``X_{rc}`` as ``(coeff, [(key, conj), ...])``.
    """
    acc: dict = defaultdict(int)
    for perm in itertools.permutations(range(dim)):
        sign = _parity(perm)
        factors = []
        for r in range(dim):
            opts = [(-c, mono) for c, mono in entry(r, perm[r])]
            if perm[r] == r:
                opts = [("lam", None)] + opts
            if not opts:
                break
            factors.append(opts)
        else:
            for choice in itertools.product(*factors):
                lam_deg, coeff, ent = 0, sign, Counter()
                for c, mono in choice:
                    if c == "lam":
                        lam_deg += 1
                    else:
                        coeff *= c
                        ent.update(mono)
                e, spow, syms = _expectation(ent)
                if e:
                    acc[(lam_deg, spow, syms)] += coeff * e
    poly = LSPoly({(i, j): v for (i, j, s), v in acc.items() if not s and v})
    residual = {k: v for k, v in acc.items() if k[2] and v}
    return OracleResult(poly, residual)


def permutation_expansion_oracle(kind: str, n: int, p: int | None = None) -> OracleResult:
    """Exact ``E det(lambda I - X)`` as a polynomial in ``lambda`` and ``sigma``.

    ``hermitian``: n x n with zero-mean diagonal and ``E|x_ij|^2 = sigma^2``.
    ``chiral``: ``[[0, Y], [Y^dagger, 0]]`` with ``Y`` of size n x p.
    ``wishart``: ``Y^dagger Y`` (p x p).
    """
    if kind == "hermitian":
        if n > 8:
            raise ValueError("oracle limited to dimension 8")

        def entry(r, c):
            if r == c:
                return [(1, [(("d", r), False)])]
            i, j = min(r, c), max(r, c)
            return [(1, [(("o", i, j), r > c)])]

        return _expand(n, entry)
    _check_sizes(n, p)
    if kind == "chiral":
        if n + p > 8:
            raise ValueError("oracle limited to dimension 8")

        def entry(r, c):
            if (r < n) == (c < n):
                return []
            if r < n:
                return [(1, [(("o", r, c - n), False)])]
            return [(1, [(("o", c, r - n), True)])]

        return _expand(n + p, entry)
    if kind == "wishart":
        if n + p > 8:
            raise ValueError("oracle limited to n + p <= 8")

        def entry(r, c):
            # (Y^dagger Y)_{rc} = sum_i conj(y_ir) y_ic
            return [(1, [(("o", i, r), True), (("o", i, c), False)]) for i in range(n)]

        return _expand(p, entry)
    raise ValueError(f"unknown kind {kind!r}")


CALIBRATION_POINTS = ((1, 1), (2, 1), (2, 2), (3, 2))


def calibrate_sign_law(points=CALIBRATION_POINTS) -> dict:
    """Sign ``s`` with ``oracle = s * unsigned formula`` for chiral and Wishart at each point.

    A value of ``None`` means neither sign matches.
    """
    out = {}
    for n, p in points:
        for kind, unsigned in (("chiral", unsigned_chiral_poly), ("wishart", unsigned_wishart_poly)):
            oracle = permutation_expansion_oracle(kind, n, p).poly.clean()
            u = unsigned(n, p).clean()
            out[(kind, n, p)] = 1 if oracle == u else (-1 if oracle == (-u).clean() else None)
    return out


# --- Monte Carlo ----------------------------------------------------------------

def _gaussian(rng, shape):
    return rng.standard_normal(shape)


def _rademacher(rng, shape):
    return rng.choice(np.array([-1.0, 1.0]), size=shape)


def _uniform(rng, shape):
    return rng.uniform(-math.sqrt(3.0), math.sqrt(3.0), size=shape)


def _skewed(rng, shape):
    # centered unit exponential: mean 0, variance 1, third moment 2
    return rng.exponential(1.0, size=shape) - 1.0


DISTRIBUTIONS: dict[str, Callable] = {
    "gaussian": _gaussian,
    "rademacher": _rademacher,
    "uniform": _uniform,
    "skewed": _skewed,
}


def draw_real(name: str, rng, shape, variance: float) -> np.ndarray:
    if name not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {name!r}; choose from {sorted(DISTRIBUTIONS)}")
    return math.sqrt(variance) * DISTRIBUTIONS[name](rng, shape)


def draw_complex(name: str, rng, shape, variance: float) -> np.ndarray:
    """Independent real and imaginary parts, each with half the variance."""
    return draw_real(name, rng, shape, variance / 2) + 1j * draw_real(name, rng, shape, variance / 2)


def sample_hermitian(rng, count: int, N: int, sigma2: float, diag: str, offdiag: str) -> np.ndarray:
    x = np.zeros((count, N, N), dtype=complex)
    iu = np.triu_indices(N, 1)
    off = draw_complex(offdiag, rng, (count, len(iu[0])), sigma2**2)
    x[:, iu[0], iu[1]] = off
    x[:, iu[1], iu[0]] = off.conj()
    idx = np.arange(N)
    x[:, idx, idx] = draw_real(diag, rng, (count, N), sigma2**2)
    return x


def sample_rect(rng, count: int, n: int, p: int, sigma: float, dist: str) -> np.ndarray:
    return draw_complex(dist, rng, (count, n, p), sigma**2)


def mc_expected_charpoly(kind: str, n: int, p: int | None, lam: float, sigma: float = 1.0,
                         dist: str = "gaussian", diag_dist: str | None = None,
                         num_samples: int = 100_000, seed: int = 42, chunk: int = 10_000) -> CountResult:
    """Monte Carlo mean of ``det(lambda I - X)`` for the chosen ensemble."""
    values = []
    for index, start in enumerate(range(0, num_samples, chunk)):
        size = min(chunk, num_samples - start)
        rng = stream(seed, index)
        if kind == "hermitian":
            x = sample_hermitian(rng, size, n, sigma, diag_dist or dist, dist)
            dim = n
        else:
            _check_sizes(n, p)
            y = sample_rect(rng, size, n, p, sigma, dist)
            if kind == "chiral":
                dim = n + p
                x = np.zeros((size, dim, dim), dtype=complex)
                x[:, :n, n:] = y
                x[:, n:, :n] = np.conj(np.swapaxes(y, 1, 2))
            elif kind == "wishart":
                dim = p
                x = np.conj(np.swapaxes(y, 1, 2)) @ y
            else:
                raise ValueError(f"unknown kind {kind!r}")
        values.append(np.linalg.det(lam * np.eye(dim) - x))
    re, se, im, se_im = summarize(np.concatenate(values))
    params = {"kind": kind, "n": n, "p": p, "lambda": lam, "sigma": sigma, "dist": dist,
              "diag_dist": diag_dist or dist, "samples": num_samples, "seed": seed}
    return CountResult("monte-carlo", params, estimate=re, stderr=se, estimate_im=im, stderr_im=se_im)


def closed_form(kind: str, n: int, p: int | None, sigma: float, lam: float) -> float:
    if kind == "hermitian":
        return expected_charpoly_hermitian(n, sigma, lam)
    if kind == "chiral":
        return expected_charpoly_chiral(n, p, sigma, lam)
    if kind == "wishart":
        return expected_charpoly_wishart(n, p, sigma, lam)
    raise ValueError(f"unknown kind {kind!r}")


def closed_poly(kind: str, n: int, p: int | None = None) -> LSPoly:
    if kind == "hermitian":
        return hermitian_closed_poly(n)
    if kind == "chiral":
        return chiral_closed_poly(n, p)
    if kind == "wishart":
        return wishart_closed_poly(n, p)
    raise ValueError(f"unknown kind {kind!r}")

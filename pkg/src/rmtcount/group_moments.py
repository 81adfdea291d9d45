"""Exact classical-group averages as finite character sums.

Every average of products of secular coefficients ``Sc_j`` (elementary
symmetric functions of the eigenvalues) and inverse secular coefficients
``Rc_j`` (complete homogeneous ones) over a classical compact group reduces,
through Cauchy/Littlewood-type identities with a finite rank, to a sum of
Kostka numbers or hook Schur coefficients over partitions with a bounded
first part or length.  Nothing here is sampled.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .matrix_enum import CountResult
from .partitions import (
    Partition,
    alternating_sum,
    conjugate,
    from_frequencies,
    is_conjugate_even,
    is_even,
    iterate_partitions,
)
from .polyring import Caps, MultiPoly
from .symfunc import hook_schur, hook_schur_coeff, kostka, restricted_cauchy_sum, schur_poly

FAMILIES = ("U", "O", "O_plus", "O_minus", "USp")


@dataclass(frozen=True)
class GroupId:
    """A classical group; for ``USp`` the matrices are ``2 * size`` square."""

    family: str
    size: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.size < 1:
            raise ValueError("group size must be at least 1")

    @property
    def dim(self) -> int:
        return 2 * self.size if self.family == "USp" else self.size

    @property
    def real(self) -> bool:
        return self.family.startswith("O")


@dataclass(frozen=True)
class MomentSpec:
    """Exponents by frequency: ``sc[j-1]`` is the power of ``Sc_j``, and so on.

    ``extra`` is None, ``"det1plusm"`` (a factor ``det(I + M)``) or
    ``("scp", p)`` (a factor ``Sc_p(M)``).
    """

    sc: tuple[int, ...] = ()
    conj_sc: tuple[int, ...] = ()
    rc: tuple[int, ...] = ()
    conj_rc: tuple[int, ...] = ()
    extra: object = None

    def __post_init__(self):
        for name in ("sc", "conj_sc", "rc", "conj_rc"):
            vals = tuple(getattr(self, name))
            if any(v < 0 for v in vals):
                raise ValueError("exponents must be non-negative")
            object.__setattr__(self, name, vals)

    @property
    def mu(self) -> Partition:
        return from_frequencies(self.sc)

    @property
    def mutilde(self) -> Partition:
        return from_frequencies(self.conj_sc)

    @property
    def nu(self) -> Partition:
        return from_frequencies(self.rc)

    @property
    def nutilde(self) -> Partition:
        return from_frequencies(self.conj_rc)

    def weight(self) -> int:
        return sum(self.mu) + sum(self.mutilde) + sum(self.nu) + sum(self.nutilde)

    def is_empty(self) -> bool:
        return self.weight() == 0 and self.extra is None


# --- U(N) -----------------------------------------------------------------

def unitary_sc_moment(N: int, a: Sequence[int], b: Sequence[int]) -> int:
    """``E_{U(N)} prod Sc_j^{a_j} conj(Sc_j)^{b_j}`` = sum over kappa_1 <= N of K(kappa, mu) K(kappa, mutilde)."""
    mu, mut = from_frequencies(a), from_frequencies(b)
    w = sum(mu)
    if w != sum(mut):
        return 0
    total = 0
    for kappa in iterate_partitions(w, max_part=N, max_length=min(len(mu), len(mut)) if w else None):
        total += kostka(kappa, mu) * kostka(kappa, mut)
    return total


def zero_one_moment(N: int, a: Sequence[int], b: Sequence[int]) -> int:
    """``E_{U(N)} prod Sc_j(U)^{a_j} Rc_j(conj U)^{b_j}`` = sum K(kappa', mu) K(kappa, mutilde)."""
    mu, mut = from_frequencies(a), from_frequencies(b)
    w = sum(mu)
    if w != sum(mut):
        return 0
    total = 0
    for kappa in iterate_partitions(w, max_part=N):
        k2 = kostka(kappa, mut)
        if k2:
            total += kostka(conjugate(kappa), mu) * k2
    return total


def mixed_moment(N: int, a: Sequence[int], b: Sequence[int], c: Sequence[int], d: Sequence[int]) -> int:
    """``E_{U(N)} prod Sc^a conj(Sc)^b Rc^c conj(Rc)^d``.

    Pairs hook Schur coefficients: ``[alpha^mu beta^nu] HS_lambda(alpha; beta)``
    times ``[gamma^mutilde delta^nutilde] HS_lambda(gamma; delta)`` with
    mu, mutilde, nu, nutilde built from a, b, c, d.  ``Sc`` and ``Rc`` of U
    carry the alpha and beta variables; the conjugates carry gamma and delta.
    """
    mu, mut = from_frequencies(a), from_frequencies(b)
    nu, nut = from_frequencies(c), from_frequencies(d)
    w = sum(mu) + sum(nu)
    if w != sum(mut) + sum(nut):
        return 0
    total = 0
    for lam in iterate_partitions(w, max_part=N):
        left = hook_schur_coeff(lam, len(mu), len(nu), mu, nu)
        if left:
            total += left * hook_schur_coeff(lam, len(mut), len(nut), mut, nut)
    return total


# --- O(N) -----------------------------------------------------------------

def orthogonal_sc_moment(N: int, a: Sequence[int]) -> int:
    """``E_{O(N)} prod Sc_j^{a_j}``: sum of K(lambda, mu) over lambda' even, l(lambda) <= N."""
    mu = from_frequencies(a)
    w = sum(mu)
    if w % 2:
        return 0
    return sum(kostka(lam, mu) for lam in iterate_partitions(w, max_length=N) if is_conjugate_even(lam))


def orthogonal_free_diag_moment(N: int, a: Sequence[int]) -> int:
    """``E_{O(N)} det(I + M) prod Sc_j^{a_j}``: sum of K(kappa, mu) over kappa_1 <= N."""
    mu = from_frequencies(a)
    return sum(kostka(k, mu) for k in iterate_partitions(sum(mu), max_part=N))


def orthogonal_prescribed_diag_moment(N: int, a: Sequence[int], p: int) -> int:
    """``E_{O(N)} Sc_p(M) prod Sc_j^{a_j}``: as above, restricted to alternating sum p."""
    mu = from_frequencies(a)
    return sum(
        kostka(k, mu) for k in iterate_partitions(sum(mu), max_part=N) if alternating_sum(k) == p
    )


# --- USp(2N) --------------------------------------------------------------

def symplectic_sc_moment(N: int, a: Sequence[int]) -> int:
    """``E_{USp(2N)} prod Sc_j^{a_j}``: sum of K(lambda, mu) over lambda even, lambda_1 <= 2N."""
    mu = from_frequencies(a)
    w = sum(mu)
    return sum(kostka(lam, mu) for lam in iterate_partitions(w, max_part=2 * N) if is_even(lam))


def block_symmetric_moment(N: int, a: Sequence[int], c: Sequence[int], variant: str) -> int:
    """``E prod Sc_i^{a_i} Rc_j^{c_j}`` over USp(2N) (``"Sp"``) or O(N) (``"O"``).

    Sums ``[alpha^mu beta^nu] HS_lambda`` over even lambda with lambda_1 <= 2N
    (Sp) or conjugate-even lambda with at most N rows (O).
    """
    mu, nu = from_frequencies(a), from_frequencies(c)
    w = sum(mu) + sum(nu)
    if variant == "Sp":
        shapes = (lam for lam in iterate_partitions(w, max_part=2 * N) if is_even(lam))
    elif variant == "O":
        shapes = (lam for lam in iterate_partitions(w, max_length=N) if is_conjugate_even(lam))
    else:
        raise ValueError("variant must be 'Sp' or 'O'")
    return sum(hook_schur_coeff(lam, len(mu), len(nu), mu, nu) for lam in shapes)


# --- doubly symmetric and point symmetric families ------------------------

def bisymmetric_coeff(N: int, mu: Sequence[int], chi0: int, chi1: int, method: str = "genfunc") -> int:
    """Count of 2n x 2n matrices symmetric about both diagonals with row sums mu.

    ``method="genfunc"`` reads the coefficient of ``q^mu`` from the product
    generating function (N is ignored).  ``method="hook"`` evaluates the U(N)
    average ``E det(1 + chi0 U)/det(1 - chi1 U) prod |det(1 + q_j U)|^2`` as
    ``sum_{lambda_1 <= N} HS_lambda(chi0, q; chi1) s_lambda(q)``.
    """
    from .genfuncs import bisymmetric_genfunc_coeff

    mu = tuple(mu)
    if method == "genfunc":
        return bisymmetric_genfunc_coeff(mu, chi0, chi1)
    if method != "hook":
        raise ValueError(f"unknown method {method!r}")
    n = len(mu)
    w = sum(mu)
    qcaps = Caps(degree=mu, total=w)
    total = 0
    for size in range(w + 1):
        for lam in iterate_partitions(size, max_part=N):
            s = schur_poly(lam, n, Caps(degree=mu, total=size))
            if not s:
                continue
            # HS in (t, q_1..q_n ; u), then t -> chi0, u -> chi1
            hcaps = Caps(degree=(size,) + mu + (size,), total=size)
            hs = hook_schur(lam, n + 1, 1, hcaps)
            images = [(chi0, (0,) * n)] + [(1, tuple(int(i == j) for j in range(n))) for i in range(n)] + [(chi1, (0,) * n)]
            hq = hs.specialize(images, n).with_caps(qcaps)
            total += (hq * MultiPoly(n, s.terms, qcaps)).coefficient(mu)
    return total


def point_symmetric_coeff(N: int, mu: Sequence[int], mutilde: Sequence[int] | None = None, method: str = "genfunc") -> int:
    """Count of point-reflection symmetric 2n x 2n matrices (see ``count_point_symmetric``).

    ``method="cauchy"`` squares the restricted Cauchy sum
    ``sum_{kappa_1 <= N} s_kappa(alpha) s_kappa(beta)``, i.e. the square of a
    U(N) average, and reads the coefficient.
    """
    from .genfuncs import point_symmetric_genfunc_coeff

    mu = tuple(mu)
    if method == "genfunc":
        return point_symmetric_genfunc_coeff(mu, mutilde)
    if method != "cauchy":
        raise ValueError(f"unknown method {method!r}")
    n = len(mu)
    if mutilde is None:
        w = sum(mu)
        if w % 2:
            return 0
        caps = Caps(degree=mu, total=w)
        f = MultiPoly(n, {}, caps)
        for size in range(w // 2 + 1):
            for kappa in iterate_partitions(size, max_part=N, max_length=n):
                s = MultiPoly(n, schur_poly(kappa, n, Caps(degree=mu, total=size)).terms, caps)
                f = f + s * s
        return (f * f).coefficient(mu)
    mut = tuple(mutilde)
    exps = mu + mut
    caps = Caps(degree=exps, total=sum(exps))
    f = restricted_cauchy_sum(N, n, len(mut), sum(mu), caps)
    return (f * f).coefficient(exps)


# --- dispatcher -------------------------------------------------------------

def exact_moment(group: GroupId, spec: MomentSpec) -> CountResult:
    """Exact value of ``E_group`` of the monomial described by ``spec``."""
    N = group.size
    params = {"group": group.family, "N": N, "sc": list(spec.sc), "csc": list(spec.conj_sc),
              "rc": list(spec.rc), "crc": list(spec.conj_rc), "extra": _extra_str(spec.extra)}
    diagnostic = None
    if group.family == "U":
        if spec.extra is not None:
            raise ValueError("extra factors are defined for O(N) averages only")
        if not spec.rc and not spec.conj_rc:
            value = unitary_sc_moment(N, spec.sc, spec.conj_sc)
        elif not spec.conj_sc and not spec.rc:
            value = zero_one_moment(N, spec.sc, spec.conj_rc)
        else:
            value = mixed_moment(N, spec.sc, spec.conj_sc, spec.rc, spec.conj_rc)
        return CountResult("character-sum", params, value=value)

    # eigenvalues of O and USp come in conjugate pairs, so conj(Sc_j) = Sc_j
    sc = _add(spec.sc, spec.conj_sc)
    rc = _add(spec.rc, spec.conj_rc)
    if group.family == "USp":
        if spec.extra is not None:
            raise ValueError("extra factors are defined for O(N) averages only")
        value = block_symmetric_moment(N, sc, rc, "Sp") if any(rc) else symplectic_sc_moment(N, sc)
        return CountResult("character-sum", params, value=value)
    if group.family != "O":
        raise ValueError("exact averages are provided for U, O and USp")
    if spec.extra == "det1plusm":
        if any(rc):
            raise ValueError("det(I+M) factor combined with Rc is not supported")
        value = orthogonal_free_diag_moment(N, sc)
    elif isinstance(spec.extra, tuple) and spec.extra[0] == "scp":
        if any(rc):
            raise ValueError("Sc_p factor combined with Rc is not supported")
        value = orthogonal_prescribed_diag_moment(N, sc, int(spec.extra[1]))
    elif any(rc):
        value = block_symmetric_moment(N, sc, rc, "O")
    else:
        if sum(from_frequencies(sc)) % 2:
            diagnostic = "odd total weight: the O(N) average vanishes"
        value = orthogonal_sc_moment(N, sc)
    return CountResult("character-sum", params, value=value, diagnostic=diagnostic)


def _add(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    n = max(len(x), len(y))
    x = list(x) + [0] * (n - len(x))
    y = list(y) + [0] * (n - len(y))
    return tuple(a + b for a, b in zip(x, y))


def _extra_str(extra) -> str | None:
    if extra is None:
        return None
    if extra == "det1plusm":
        return "det1plusm"
    return f"scp:{extra[1]}"


def parse_extra(text: str | None):
    if not text:
        return None
    if text == "det1plusm":
        return "det1plusm"
    if text.startswith("scp:"):
        return ("scp", int(text.split(":", 1)[1]))
    raise ValueError(f"unknown extra factor {text!r}")

"""Brute-force counts of constrained non-negative integer matrices.

These are the ground-truth oracles.  Counting is a depth-first fill with
running row/column remainders; the plain rectangular and symmetric families
memoize on the remainder vector, the doubly-symmetric families generate full
matrices and test the symmetry directly.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .partitions import Partition

log = logging.getLogger(__name__)


class EntryDomain(str, Enum):
    NONNEG = "nonneg"
    ZERO_ONE = "zeroone"
    BLOCK = "block"


class Symmetry(str, Enum):
    NONE = "none"
    SYMMETRIC = "symmetric"
    DIAG_ANTIDIAG = "diag-antidiag"
    POINT = "point"
    BLOCK_SYMMETRIC = "block-symmetric"


class DiagonalRule(str, Enum):
    FREE = "free"
    ZERO = "zero"
    EVEN = "even"
    PRESCRIBED_SUM = "prescribed-sum"


@dataclass(frozen=True)
class MatrixClassSpec:
    """Declarative description of a constrained matrix family.

    ``block`` holds ``(k1, l1, k2, l2)`` for block families; ``variant`` is
    ``"Sp"`` or ``"O"`` for the block-symmetric family; ``chi0``/``chi1`` are
    the diagonal/anti-diagonal flags of the doubly-symmetric family.
    """

    entry_domain: EntryDomain = EntryDomain.NONNEG
    symmetry: Symmetry = Symmetry.NONE
    diagonal_rule: DiagonalRule = DiagonalRule.FREE
    diag_sum: int | None = None
    block: tuple[int, int, int, int] | None = None
    variant: str | None = None
    chi0: int = 1
    chi1: int = 1

    def __post_init__(self):
        if self.diagonal_rule is DiagonalRule.PRESCRIBED_SUM and self.diag_sum is None:
            raise ValueError("prescribed diagonal sum needs diag_sum")
        if self.symmetry is Symmetry.BLOCK_SYMMETRIC and self.variant not in ("Sp", "O"):
            raise ValueError("block-symmetric class needs variant 'Sp' or 'O'")
        if self.chi0 not in (0, 1) or self.chi1 not in (0, 1):
            raise ValueError("chi flags must be 0 or 1")


@dataclass
class CountResult:
    """An exact count or a Monte Carlo estimate, with the query echoed back."""

    method: str
    params: dict = field(default_factory=dict)
    value: int | None = None
    estimate: float | None = None
    stderr: float | None = None
    estimate_im: float | None = None
    stderr_im: float | None = None
    diagnostic: str | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


# --- rectangular ---------------------------------------------------------

def _row_fills(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All vectors x with sum(x) = total and 0 <= x_j <= caps[j]."""
    n = len(caps)
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + caps[j]
    x = [0] * n

    def rec(j: int, left: int):
        if j == n:
            if left == 0:
                yield tuple(x)
            return
        if suffix[j] < left:
            return
        for v in range(min(caps[j], left), -1, -1):
            x[j] = v
            yield from rec(j + 1, left - v)
        x[j] = 0

    yield from rec(0, total)


def count_rectangular(rows: Sequence[int], cols: Sequence[int], entry_cap: Callable[[int, int], int] | None = None) -> int:
    """Number of non-negative integer matrices with the given row and column sums.

    ``entry_cap(i, j)`` bounds entry ``(i, j)``; None means unbounded.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if sum(rows) != sum(cols):
        return 0
    m = len(rows)
    big = sum(rows)
    cap = (lambda i, j: big) if entry_cap is None else entry_cap

    @lru_cache(maxsize=None)
    def rec(i: int, rem: tuple[int, ...]) -> int:
        if i == m:
            return 1 if not any(rem) else 0
        total = 0
        caps = [min(rem[j], cap(i, j)) for j in range(len(rem))]
        for fill in _row_fills(rows[i], caps):
            total += rec(i + 1, tuple(r - x for r, x in zip(rem, fill)))
        return total

    return rec(0, cols)


def iter_rectangular(rows: Sequence[int], cols: Sequence[int], entry_cap: Callable[[int, int], int] | None = None) -> Iterator[list[list[int]]]:
    rows = tuple(rows)
    cols = tuple(cols)
    if sum(rows) != sum(cols):
        return
    m = len(rows)
    big = sum(rows)
    cap = (lambda i, j: big) if entry_cap is None else entry_cap
    acc: list[tuple[int, ...]] = []

    def rec(i: int, rem: tuple[int, ...]):
        if i == m:
            if not any(rem):
                yield [list(r) for r in acc]
            return
        caps = [min(rem[j], cap(i, j)) for j in range(len(rem))]
        for fill in _row_fills(rows[i], caps):
            acc.append(fill)
            yield from rec(i + 1, tuple(r - x for r, x in zip(rem, fill)))
            acc.pop()

    yield from rec(0, cols)


# --- symmetric -----------------------------------------------------------

def _diag_values(rule: DiagonalRule, limit: int) -> range:
    if rule is DiagonalRule.ZERO:
        return range(0, 1)
    if rule is DiagonalRule.EVEN:
        return range(0, limit + 1, 2)
    return range(0, limit + 1)


def count_symmetric(
    row_sums: Sequence[int],
    diagonal: DiagonalRule | Sequence[DiagonalRule] = DiagonalRule.FREE,
    trace: int | None = None,
    entry_cap: Callable[[int, int], int] | None = None,
) -> int:
    """Symmetric non-negative integer matrices with the given row sums.

    ``diagonal`` may be a single rule or one rule per index; ``trace`` fixes
    the diagonal sum.  Only the upper triangle is filled.
    """
    r = tuple(row_sums)
    n = len(r)
    rules = [diagonal] * n if isinstance(diagonal, DiagonalRule) else list(diagonal)
    big = sum(r)
    cap = (lambda i, j: big) if entry_cap is None else entry_cap

    @lru_cache(maxsize=None)
    def rec(i: int, rem: tuple[int, ...], tr: int) -> int:
        if i == n:
            return 1 if (trace is None or tr == 0) else 0
        total = 0
        need = rem[i]
        dmax = min(need, cap(i, i))
        if trace is not None:
            dmax = min(dmax, tr)
        for d in _diag_values(rules[i], dmax):
            left = need - d
            off_caps = [min(rem[j], cap(i, j)) for j in range(i + 1, n)]
            for fill in _row_fills(left, off_caps):
                new = list(rem)
                new[i] = 0
                for j, x in zip(range(i + 1, n), fill):
                    new[j] -= x
                total += rec(i + 1, tuple(new), tr - d if trace is not None else 0)
        return total

    return rec(0, r, trace if trace is not None else 0)


def iter_symmetric(row_sums: Sequence[int], entry_ok: Callable[[int, int, int], bool] | None = None) -> Iterator[list[list[int]]]:
    """Generate every symmetric non-negative matrix with the given row sums."""
    r = list(row_sums)
    n = len(r)
    x = [[0] * n for _ in range(n)]
    ok = entry_ok or (lambda i, j, v: True)

    def rec(i: int, rem: list[int]):
        if i == n:
            yield [row[:] for row in x]
            return
        need = rem[i]
        for d in range(need, -1, -1):
            if not ok(i, i, d):
                continue
            caps = rem[i + 1:]
            for fill in _row_fills(need - d, caps):
                if not all(ok(i, j, v) for j, v in zip(range(i + 1, n), fill)):
                    continue
                x[i][i] = d
                new = rem[:]
                new[i] = 0
                for j, v in zip(range(i + 1, n), fill):
                    x[i][j] = x[j][i] = v
                    new[j] -= v
                yield from rec(i + 1, new)
                for j in range(i + 1, n):
                    x[i][j] = x[j][i] = 0
                x[i][i] = 0

    yield from rec(0, r)


# --- public counting entry point ---------------------------------------------

def _mirror(mu: Sequence[int]) -> list[int]:
    return list(mu) + list(reversed(mu))


def count_diag_antidiag(mu: Sequence[int], chi0: int, chi1: int) -> int:
    """2n x 2n matrices symmetric about both diagonals; ``mu`` = sums of rows 1..n.

    ``chi0 = 0`` forces a zero diagonal, ``chi1 = 0`` an even anti-diagonal.
    """
    n = len(mu)
    size = 2 * n

    def ok(i, j, v):
        if i == j and not chi0 and v:
            return False
        if i + j == size - 1 and not chi1 and v % 2:
            return False
        return True

    count = 0
    for x in iter_symmetric(_mirror(mu), ok):
        if all(x[i][j] == x[size - 1 - j][size - 1 - i] for i in range(size) for j in range(size)):
            count += 1
    return count


def _point_symmetric_from_top(top: list[list[int]]) -> list[list[int]]:
    n = len(top)
    size = 2 * n
    full = [row[:] for row in top] + [[0] * size for _ in range(n)]
    for i in range(n):
        for j in range(size):
            full[size - 1 - i][size - 1 - j] = top[i][j]
    return full


def iter_point_symmetric(n: int, half_total: int) -> Iterator[list[list[int]]]:
    """All 2n x 2n matrices with ``x_ij = x_{2n+1-i, 2n+1-j}`` whose top half sums to ``half_total``."""
    size = 2 * n
    cells = n * size
    for flat in _row_fills(half_total, [half_total] * cells):
        top = [list(flat[i * size:(i + 1) * size]) for i in range(n)]
        yield _point_symmetric_from_top(top)


def count_point_symmetric(mu: Sequence[int], mutilde: Sequence[int] | None = None) -> int:
    """Point-reflection symmetric 2n x 2n matrices.

    With ``mutilde`` given: rows 1..n sum to ``mu`` and columns 1..n sum to
    ``mutilde``.  Without it: row sum plus column sum of index k equals
    ``mu[k]`` for k = 1..n, which is what the coefficient of ``q^mu`` in
    ``prod_{i,j} (1 - q_i q_j)^-2`` counts.
    """
    n = len(mu)
    size = 2 * n
    if mutilde is not None:
        if len(mutilde) != n:
            raise ValueError("mu and mutilde must have the same length n")
        if sum(mu) != sum(mutilde):
            return 0
        # the top half is an n x 2n matrix with row sums mu; the bottom half is forced
        count = 0
        row_choices = [list(_row_fills(r, [r] * size)) for r in mu]
        for top in itertools.product(*row_choices):
            full = _point_symmetric_from_top([list(r) for r in top])
            cols = [sum(full[i][j] for i in range(size)) for j in range(n)]
            if cols == list(mutilde):
                count += 1
        return count
    if sum(mu) % 2:
        return 0
    count = 0
    for full in iter_point_symmetric(n, sum(mu) // 2):
        rows = [sum(full[k]) for k in range(n)]
        cols = [sum(full[i][k] for i in range(size)) for k in range(n)]
        if all(r + c == m for r, c, m in zip(rows, cols, mu)):
            count += 1
    return count


def count(spec: MatrixClassSpec, mu: Sequence[int], mutilde: Sequence[int] | None = None,
          nu: Sequence[int] | None = None, nutilde: Sequence[int] | None = None) -> CountResult:
    """Exact brute-force count for a matrix family."""
    params = {"spec": _spec_dict(spec), "mu": list(mu)}
    for name, val in (("mutilde", mutilde), ("nu", nu), ("nutilde", nutilde)):
        if val is not None:
            params[name] = list(val)
    diagnostic = None
    sym = spec.symmetry

    if sym is Symmetry.NONE and spec.entry_domain is EntryDomain.BLOCK:
        if mutilde is None or nu is None or nutilde is None:
            raise ValueError("block class needs mu, mutilde, nu and nutilde")
        k1, l1, k2, l2 = len(mu), len(nu), len(mutilde), len(nutilde)
        if spec.block is not None and spec.block != (k1, l1, k2, l2):
            k1, l1, k2, l2 = spec.block
        rows = _pad(mu, k1) + _pad(nu, l1)
        cols = _pad(mutilde, k2) + _pad(nutilde, l2)
        if sum(rows) != sum(cols):
            value, diagnostic = 0, "row and column totals differ"
        else:
            def cap(i, j):
                in_top = i < k1
                in_left = j < k2
                return 1 if in_top != in_left else sum(rows)
            value = count_rectangular(rows, cols, cap)
        return CountResult("brute", params, value=value, diagnostic=diagnostic)

    if sym is Symmetry.NONE:
        cols = mu if mutilde is None else mutilde
        if sum(mu) != sum(cols):
            return CountResult("brute", params, value=0, diagnostic="row and column totals differ")
        if spec.entry_domain is EntryDomain.ZERO_ONE:
            value = count_rectangular(mu, cols, lambda i, j: 1)
        else:
            value = count_rectangular(mu, cols)
        return CountResult("brute", params, value=value)

    if sym is Symmetry.SYMMETRIC:
        trace = spec.diag_sum if spec.diagonal_rule is DiagonalRule.PRESCRIBED_SUM else None
        rule = DiagonalRule.FREE if trace is not None else spec.diagonal_rule
        if trace is not None and (trace < 0 or (sum(mu) - trace) % 2):
            return CountResult("brute", params, value=0, diagnostic="diagonal sum has the wrong parity")
        return CountResult("brute", params, value=count_symmetric(mu, rule, trace))

    if sym is Symmetry.DIAG_ANTIDIAG:
        return CountResult("brute", params, value=count_diag_antidiag(mu, spec.chi0, spec.chi1))

    if sym is Symmetry.POINT:
        return CountResult("brute", params, value=count_point_symmetric(mu, mutilde))

    if sym is Symmetry.BLOCK_SYMMETRIC:
        nu = () if nu is None else nu
        k, l = len(mu), len(nu)
        if spec.block is not None:
            k, l = spec.block[0], spec.block[1]
        rows = _pad(mu, k) + _pad(nu, l)
        a_rule, d_rule = (DiagonalRule.EVEN, DiagonalRule.ZERO) if spec.variant == "Sp" else (DiagonalRule.ZERO, DiagonalRule.EVEN)
        rules = [a_rule] * k + [d_rule] * l
        big = sum(rows)

        def cap(i, j):
            return 1 if (i < k) != (j < k) else big

        return CountResult("brute", params, value=count_symmetric(rows, rules, None, cap))

    raise ValueError(f"unsupported class {spec}")


def _pad(v: Sequence[int], n: int) -> list[int]:
    v = list(v)
    if len(v) > n:
        raise ValueError(f"{v} has more than {n} entries")
    return v + [0] * (n - len(v))


def _spec_dict(spec: MatrixClassSpec) -> dict:
    d = {
        "entry_domain": spec.entry_domain.value,
        "symmetry": spec.symmetry.value,
        "diagonal_rule": spec.diagonal_rule.value,
    }
    if spec.diag_sum is not None:
        d["diag_sum"] = spec.diag_sum
    if spec.block is not None:
        d["block"] = list(spec.block)
    if spec.variant is not None:
        d["variant"] = spec.variant
    if spec.symmetry is Symmetry.DIAG_ANTIDIAG:
        d["chi0"], d["chi1"] = spec.chi0, spec.chi1
    return d


def count_magic(k: int, j: int) -> CountResult:
    """``H_k(j)``: k x k non-negative integer matrices with all line sums ``j``."""
    res = count(MatrixClassSpec(), [j] * k, [j] * k)
    res.params = {"k": k, "j": j}
    return res


def count_symmetric_prescribed_diag(mu: Sequence[int], p: int) -> CountResult:
    spec = MatrixClassSpec(symmetry=Symmetry.SYMMETRIC, diagonal_rule=DiagonalRule.PRESCRIBED_SUM, diag_sum=p)
    return count(spec, mu)


def normalize_sums(sums: Sequence[int]) -> Partition:
    """Sort unordered line sums into a partition, logging when the order changed."""
    p = Partition.sorted(sums)
    if tuple(p) != tuple(s for s in sums if s) or any(s == 0 for s in sums):
        log.info("normalized line sums %s to partition %s", list(sums), tuple(p))
    return p


# named classes used by the CLI
CLASSES: dict[str, MatrixClassSpec] = {
    "nonneg": MatrixClassSpec(),
    "zeroone": MatrixClassSpec(entry_domain=EntryDomain.ZERO_ONE),
    "sym": MatrixClassSpec(symmetry=Symmetry.SYMMETRIC),
    "sym-zero": MatrixClassSpec(symmetry=Symmetry.SYMMETRIC, diagonal_rule=DiagonalRule.ZERO),
    "sym-even": MatrixClassSpec(symmetry=Symmetry.SYMMETRIC, diagonal_rule=DiagonalRule.EVEN),
    "bisym": MatrixClassSpec(symmetry=Symmetry.DIAG_ANTIDIAG),
    "point": MatrixClassSpec(symmetry=Symmetry.POINT),
    "block": MatrixClassSpec(entry_domain=EntryDomain.BLOCK),
    "blocksym-sp": MatrixClassSpec(entry_domain=EntryDomain.BLOCK, symmetry=Symmetry.BLOCK_SYMMETRIC, variant="Sp"),
    "blocksym-o": MatrixClassSpec(entry_domain=EntryDomain.BLOCK, symmetry=Symmetry.BLOCK_SYMMETRIC, variant="O"),
}

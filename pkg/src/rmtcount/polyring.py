"""Truncated multivariate polynomials over Python integers.

Every :class:`MultiPoly` carries :class:`Caps`: optional per-variable degree
bounds and an optional total-degree bound.  Products and series expansions
drop any term outside the caps, so a ``MultiPoly`` represents a power series
modulo the monomial ideal generated by the out-of-cap monomials.  Asking for a
coefficient outside the caps raises :class:`TruncationError` instead of
silently returning 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

Exponents = tuple[int, ...]


class TruncationError(ValueError):
    """A query or substitution escaped the degree caps."""


@dataclass(frozen=True)
class Caps:
    degree: tuple[int | None, ...] | None = None
    total: int | None = None

    def admits(self, exps: Sequence[int]) -> bool:
        if self.total is not None and sum(exps) > self.total:
            return False
        if self.degree is not None:
            for e, c in zip(exps, self.degree):
                if c is not None and e > c:
                    return False
        return True

    @property
    def bounded(self) -> bool:
        return self.total is not None or (
            self.degree is not None and all(c is not None for c in self.degree)
        )

    def meet(self, other: "Caps") -> "Caps":
        if self == other:
            return self
        total = _min_opt(self.total, other.total)
        if self.degree is None:
            degree = other.degree
        elif other.degree is None:
            degree = self.degree
        else:
            degree = tuple(_min_opt(a, b) for a, b in zip(self.degree, other.degree))
        return Caps(degree, total)


def _min_opt(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


UNBOUNDED = Caps()


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names; index order is fixed for a computation."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def indexed(cls, *groups: tuple[str, int]) -> "VarSet":
        return cls(tuple(f"{stem}{i}" for stem, n in groups for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


class MultiPoly:
    __slots__ = ("nvars", "terms", "caps")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None, caps: Caps = UNBOUNDED):
        self.nvars = nvars
        self.caps = caps
        clean: dict[Exponents, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong arity for {nvars} variables")
            if c and caps.admits(e):
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, nvars: int, value: int, caps: Caps = UNBOUNDED) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value}, caps)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1, caps: Caps = UNBOUNDED) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coeff}, caps)

    @classmethod
    def variable(cls, nvars: int, i: int, caps: Caps = UNBOUNDED) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, caps)

    def _new(self, terms: dict[Exponents, int], caps: Caps | None = None) -> "MultiPoly":
        p = MultiPoly.__new__(MultiPoly)
        p.nvars = self.nvars
        p.caps = self.caps if caps is None else caps
        p.terms = {e: c for e, c in terms.items() if c}
        return p

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.nvars, other, self.caps)
        return NotImplemented

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        caps = self.caps.meet(other.caps)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        if caps != self.caps or caps != other.caps:
            out = {e: c for e, c in out.items() if caps.admits(e)}
        return self._new(out, caps)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        caps = self.caps.meet(other.caps)
        return self._new(_mul_terms(self.terms, other.terms, caps), caps)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials; use expand_factor_product")
        result = MultiPoly.constant(self.nvars, 1, self.caps)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"MultiPoly({self.nvars}, 0)"
        shown = " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items())[:6])
        more = " + ..." if len(self.terms) > 6 else ""
        return f"MultiPoly({self.nvars}, {shown}{more})"

    # queries ----------------------------------------------------------
    def coefficient(self, exps: Sequence[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent arity mismatch")
        if not self.caps.admits(exps):
            raise TruncationError(f"coefficient {exps} lies outside the caps {self.caps}; raise the truncation")
        return self.terms.get(exps, 0)

    def with_caps(self, caps: Caps) -> "MultiPoly":
        """Truncate further (caps are met with the current ones)."""
        caps = self.caps.meet(caps)
        return self._new({e: c for e, c in self.terms.items() if caps.admits(e)}, caps)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t *= v**k
            total += t
        return total

    def truncated_equal(self, other: "MultiPoly", caps: Caps) -> bool:
        """Equality of the two series modulo the given caps."""
        a = {e: c for e, c in self.terms.items() if caps.admits(e)}
        b = {e: c for e, c in other.terms.items() if caps.admits(e)}
        return a == b

    def dump(self) -> list[str]:
        """Sorted ``"e1,e2,...: c"`` lines, the golden-file format."""
        return [f"{','.join(map(str, e))}: {c}" for e, c in sorted(self.terms.items())]

    def univariate_coefficients(self) -> list[int]:
        if self.nvars != 1:
            raise ValueError("not univariate")
        deg = self.total_degree()
        return [self.terms.get((k,), 0) for k in range(deg + 1)]

    # substitutions ----------------------------------------------------
    def specialize(self, images: Sequence[tuple[int, Sequence[int]]], new_nvars: int, caps: Caps = UNBOUNDED) -> "MultiPoly":
        """Substitute ``x_i -> coeff_i * y^{vec_i}`` for each variable.

        ``images[i] = (coeff_i, vec_i)``; a constant substitution uses the
        zero vector, a rename uses a unit vector.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        out: dict[Exponents, int] = {}
        for e, c in self.terms.items():
            coeff = c
            vec = [0] * new_nvars
            for k, (ci, vi) in zip(e, images):
                if k:
                    coeff *= ci**k
                    if coeff == 0:
                        break
                    for j, v in enumerate(vi):
                        vec[j] += v * k
            if coeff:
                key = tuple(vec)
                out[key] = out.get(key, 0) + coeff
        if caps.bounded or caps.degree is not None:
            for key in out:
                if out[key] and not caps.admits(key):
                    raise TruncationError(f"substitution produced {key} beyond caps {caps}")
        return MultiPoly(new_nvars, out, caps)


def _mul_terms(a: Mapping[Exponents, int], b: Mapping[Exponents, int], caps: Caps) -> dict[Exponents, int]:
    if len(a) > len(b):
        a, b = b, a
    out: dict[Exponents, int] = {}
    total = caps.total
    degree = caps.degree
    bounds = None
    if degree is not None:
        bounds = tuple(10**18 if c is None else c for c in degree)
    items_b = sorted(((sum(e), e, c) for e, c in b.items()))
    for e1, c1 in a.items():
        d1 = sum(e1)
        for d2, e2, c2 in items_b:
            if total is not None and d1 + d2 > total:
                break
            e = tuple(x + y for x, y in zip(e1, e2))
            if bounds is not None and any(x > m for x, m in zip(e, bounds)):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    return out


class Factor(NamedTuple):
    """``(1 + sign * x^monomial) ** power``."""

    sign: int
    monomial: tuple[int, ...]
    power: int = 1


def factor_series(f: Factor, caps: Caps) -> MultiPoly:
    nvars = len(f.monomial)
    if f.sign not in (1, -1):
        raise ValueError("factor sign must be +1 or -1")
    zero = not any(f.monomial)
    if f.power >= 0:
        base = MultiPoly(nvars, {(0,) * nvars: 1, f.monomial: f.sign} if not zero else {(0,) * nvars: 1 + f.sign}, caps)
        return base ** f.power
    if zero:
        raise ValueError(f"factor (1 {'+' if f.sign > 0 else '-'} 1)^-1 has a non-invertible constant term")
    if not caps.bounded:
        raise TruncationError("a geometric factor needs finite caps")
    # 1/(1 + s m) = sum_k (-s)^k m^k
    terms: dict[Exponents, int] = {}
    k = 0
    r = -f.sign
    while True:
        e = tuple(k * x for x in f.monomial)
        if not caps.admits(e):
            break
        terms[e] = r**k
        k += 1
    series = MultiPoly(nvars, terms, caps)
    return series ** (-f.power)


def expand_factor_product(factors: Iterable[Factor | tuple], nvars: int, caps: Caps) -> MultiPoly:
    """Truncated expansion of ``prod (1 + s_i m_i)^{p_i}``.

    >>> q = Caps(total=3)
    >>> expand_factor_product([Factor(-1, (1,), -1)], 1, q).univariate_coefficients()
    [1, 1, 1, 1]
    """
    result = MultiPoly.constant(nvars, 1, caps)
    for f in factors:
        f = Factor(*f)
        if len(f.monomial) != nvars:
            raise ValueError("factor monomial arity mismatch")
        result = result * factor_series(f, caps)
    return result


def substitute_q_powers(f: MultiPoly, powers: Sequence[int], cap: int | None = None) -> MultiPoly:
    """Principal-type specialization ``x_i -> q^{powers[i]}`` into a univariate polynomial."""
    caps = UNBOUNDED if cap is None else Caps(total=cap)
    return f.specialize([(1, (p,)) for p in powers], 1, caps)


def det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Division-free determinant by Laplace expansion along rows, memoized on column sets."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    caps = matrix[0][0].caps
    # minors[S] = det of rows k..n-1 restricted to column set S (|S| = n-k)
    memo: dict[frozenset, MultiPoly] = {}

    def minor(k: int, cols: tuple[int, ...]) -> MultiPoly:
        if k == n:
            return MultiPoly.constant(nvars, 1, caps)
        key = frozenset(cols)
        if key in memo:
            return memo[key]
        acc = MultiPoly(nvars, {}, caps)
        for idx, j in enumerate(cols):
            entry = matrix[k][j]
            if not entry:
                continue
            sub = minor(k + 1, cols[:idx] + cols[idx + 1:])
            if not sub:
                continue
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))

"""Plane partitions in a box and symmetric plane partitions.

A plane partition in the box ``a x b x c`` is an ``a x b`` array of heights
in ``0..c``, weakly decreasing along rows and columns.  Counts are computed
by brute force, by product formulas, through gamma/Barnes-G expressions
(exact rationals) and from q-generating functions at ``q = 1``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction

from .partitions import is_even, iterate_partitions
from .polyring import Caps, Factor, MultiPoly, expand_factor_product, substitute_q_powers
from .symfunc import schur_poly

BOX_BRUTE_LIMIT = (9, 6)  # a*b, c


def _decreasing_rows(length: int, top: int, ceiling: tuple[int, ...] | None = None):
    """Weakly decreasing tuples of ``length`` entries in ``0..top``, entrywise below ``ceiling``."""
    if length == 0:
        yield ()
        return

    def rec(j: int, hi: int, prefix: list[int]):
        if j == length:
            yield tuple(prefix)
            return
        bound = hi if ceiling is None else min(hi, ceiling[j])
        for v in range(bound, -1, -1):
            prefix.append(v)
            yield from rec(j + 1, v, prefix)
            prefix.pop()

    yield from rec(0, top, [])


def _check_box(a: int, b: int, c: int) -> None:
    if min(a, b, c) < 1:
        raise ValueError("box dimensions must be positive")


def box_qgen_brute(a: int, b: int, c: int) -> MultiPoly:
    """Sum of ``q^{total height}`` over plane partitions in the box, by row transfer."""
    _check_box(a, b, c)
    if a * b > BOX_BRUTE_LIMIT[0] or c > BOX_BRUTE_LIMIT[1]:
        raise ValueError(f"box {a}x{b}x{c} exceeds the brute-force limit; use the product formula")
    rows = list(_decreasing_rows(b, c))
    layer = {row: Counter({sum(row): 1}) for row in rows}
    for _ in range(a - 1):
        nxt: dict[tuple, Counter] = {}
        for prev, weights in layer.items():
            for row in _decreasing_rows(b, c, prev):
                acc = nxt.setdefault(row, Counter())
                s = sum(row)
                for w, k in weights.items():
                    acc[w + s] += k
        layer = nxt
    total: Counter = Counter()
    for weights in layer.values():
        total.update(weights)
    return MultiPoly(1, {(w,): k for w, k in total.items()})


def count_box_brute(a: int, b: int, c: int) -> int:
    return box_qgen_brute(a, b, c).evaluate([1])


def macmahon_product(a: int, b: int, c: int) -> int:
    """``prod_{i,j,k} (i+j+k-1)/(i+j+k-2)`` over the box, as an exact rational."""
    _check_box(a, b, c)
    r = Fraction(1)
    for i, j, k in itertools.product(range(1, a + 1), range(1, b + 1), range(1, c + 1)):
        r *= Fraction(i + j + k - 1, i + j + k - 2)
    if r.denominator != 1:
        raise ArithmeticError("MacMahon product did not reduce to an integer")
    return r.numerator


def barnes_g(n: int) -> int:
    """Barnes G at a positive integer: ``G(n) = prod_{k=1}^{n-2} k!``."""
    if n < 1:
        raise ValueError("Barnes G is evaluated at positive integers only")
    out = 1
    for k in range(1, n - 1):
        out *= math.factorial(k)
    return out


def box_count_gamma(a: int, b: int, c: int, printed: bool = False) -> int:
    """``prod_{j=0}^{c-1} Gamma(a+b+1+j) Gamma(1+j) / (Gamma(a+1+j) Gamma(b+1+j))``.

    ``printed=True`` puts ``Gamma(2+j)`` in place of ``Gamma(1+j)``, which
    overcounts by ``c!``; kept for the regression test.
    """
    f = math.factorial
    r = Fraction(1)
    for j in range(c):
        r *= Fraction(f(a + b + j) * f(j + (1 if printed else 0)), f(a + j) * f(b + j))
    return _as_int(r)


def box_count_barnes(a: int, b: int, c: int, printed: bool = False) -> int:
    """``G(1+a+b+c) G(1+a) G(1+b) G(1+c) / (G(1+a+b) G(1+a+c) G(1+b+c))``.

    ``printed=True`` uses ``G(c+2)`` for ``G(c+1)``; off by the same ``c!``.
    """
    G = barnes_g
    last = G(c + 2) if printed else G(c + 1)
    r = Fraction(G(1 + a + b + c) * G(1 + a) * G(1 + b) * last, G(1 + a + b) * G(1 + a + c) * G(1 + b + c))
    return _as_int(r)


def _as_int(r: Fraction) -> int:
    if r.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {r}")
    return r.numerator


def macmahon_qgen(a: int, b: int, c: int) -> MultiPoly:
    """``prod (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2})`` expanded to its (exact) degree ``abc``."""
    _check_box(a, b, c)
    caps = Caps(total=a * b * c)
    factors = []
    for i, j, k in itertools.product(range(1, a + 1), range(1, b + 1), range(1, c + 1)):
        factors.append(Factor(-1, (i + j + k - 1,), 1))
        factors.append(Factor(-1, (i + j + k - 2,), -1))
    return expand_factor_product(factors, 1, caps)


def qgen_via_schur(a: int, b: int, c: int) -> MultiPoly:
    """``q^{-b a(a+1)/2} s_{b^a}(q^{a+c}, ..., q)``."""
    _check_box(a, b, c)
    n = a + c
    s = schur_poly((b,) * a, n)
    top = b * sum(range(c + 1, n + 1))
    g = substitute_q_powers(s, list(range(n, 0, -1)), top)
    shift = b * a * (a + 1) // 2
    return MultiPoly(1, {(e[0] - shift,): k for e, k in g.terms.items()})


# --- symmetric plane partitions --------------------------------------------

def sym_qgen_brute(a: int, top: int, even_diagonal: bool) -> MultiPoly:
    """Symmetric ``a x a`` plane partitions with heights ``<= top``, weighted by the upper triangle.

    With ``even_diagonal`` the diagonal stacks must be even.
    """
    if a < 1:
        raise ValueError("a must be positive")
    # row i stores h_{i,i..a-1}; column monotonicity bounds it by h_{i-1,i..a-1}
    total: Counter = Counter()

    def rec(i: int, prev: tuple[int, ...] | None, weight: int):
        if i == a:
            total[weight] += 1
            return
        length = a - i
        ceiling = None if prev is None else prev[1:]
        for row in _decreasing_rows(length, top, ceiling):
            if even_diagonal and row[0] % 2:
                continue
            rec(i + 1, row, weight + sum(row))

    rec(0, None, 0)
    return MultiPoly(1, {(w,): k for w, k in total.items()})


def sym_even_qgen_product(a: int, c: int) -> MultiPoly:
    """``prod_{i<=j} (1 - q^{i+j+2c}) / (1 - q^{i+j})``."""
    factors = []
    degree = 0
    for i in range(1, a + 1):
        for j in range(i, a + 1):
            factors.append(Factor(-1, (i + j + 2 * c,), 1))
            factors.append(Factor(-1, (i + j,), -1))
            degree += 2 * c
    return expand_factor_product(factors, 1, Caps(total=degree))


def sym_qgen_schur(a: int, c: int, even: bool) -> MultiPoly:
    """``sum s_lambda(q^a, ..., q)`` over ``lambda`` inside ``(fill)^a``.

    ``even=True`` uses even ``lambda`` inside ``(2c)^a``; otherwise all
    ``lambda`` inside ``c^a``.
    """
    width = 2 * c if even else c
    powers = list(range(a, 0, -1))
    acc = MultiPoly(1, {})
    for w in range(a * width + 1):
        for lam in iterate_partitions(w, max_part=width, max_length=a):
            if even and not is_even(lam):
                continue
            acc = acc + substitute_q_powers(schur_poly(lam, a), powers)
    return MultiPoly(1, acc.terms)


def count_sym_even_product(a: int, c: int) -> int:
    r = Fraction(1)
    for i in range(1, a + 1):
        for j in range(i, a + 1):
            r *= Fraction(i + j + 2 * c, i + j)
    return _as_int(r)


def _gamma_half_ratio(x_twice: int, y_twice: int) -> Fraction:
    """``Gamma(x) / Gamma(y)`` for half-integers ``x, y`` given as ``2x, 2y`` with ``x - y`` integral."""
    if (x_twice - y_twice) % 2:
        raise ValueError("arguments must differ by an integer")
    r = Fraction(1)
    if x_twice >= y_twice:
        for t in range(y_twice, x_twice, 2):
            r *= Fraction(t, 2)
    else:
        for t in range(x_twice, y_twice, 2):
            r /= Fraction(t, 2)
    return r


def count_sym_even_gamma(a: int, c: int) -> Fraction:
    """``2^{2ca} prod_{j=1}^c Gamma(1+c+j) Gamma(1/2+a+j) / (Gamma(1+c+a+j) Gamma(1/2+j))``."""
    f = math.factorial
    r = Fraction(2 ** (2 * c * a))
    for j in range(1, c + 1):
        r *= Fraction(f(c + j), f(c + a + j)) * _gamma_half_ratio(1 + 2 * a + 2 * j, 1 + 2 * j)
    return r


def _barnes_half_ratio(x_twice: int, y_twice: int) -> Fraction:
    """``G(x) / G(y)`` for half-integers ``x > y``, in units of ``Gamma(3/2)``.

    It uses ``G(z + 1) = Gamma(z) G(z)``; each factor ``Gamma(t)`` is stored as
    ``Gamma(t) / Gamma(3/2)``, so the result is off by ``Gamma(3/2)^{x - y}``.
    """
    r = Fraction(1)
    for t in range(y_twice, x_twice, 2):
        r *= _gamma_half_ratio(t, 3)
    return r


def count_sym_even_barnes(a: int, c: int) -> Fraction:
    """Barnes-G form with half-integer arguments.

    ``G(3/2 + a + c)/G(3/2 + a)`` and ``G(3/2 + c)/G(3/2)`` both span ``c``
    steps, so the ``Gamma(3/2)`` units left out by ``_barnes_half_ratio`` cancel.
    """
    G = barnes_g
    ints = Fraction(G(2 + 2 * c) * G(2 + c + a), G(2 + c) * G(2 + 2 * c + a))
    halves = _barnes_half_ratio(3 + 2 * a + 2 * c, 3 + 2 * a) / _barnes_half_ratio(3 + 2 * c, 3)
    return Fraction(2 ** (2 * c * a)) * ints * halves


def count_sym_even_diag(a: int, c: int, method: str = "product") -> int:
    if method == "product":
        return count_sym_even_product(a, c)
    if method == "brute":
        if a > 3 or c > 3:
            raise ValueError("brute force is limited to a <= 3, c <= 3")
        return sym_qgen_brute(a, 2 * c, True).evaluate([1])
    if method == "schur":
        return sym_qgen_schur(a, c, even=True).evaluate([1])
    if method == "gamma":
        return _as_int(count_sym_even_gamma(a, c))
    if method == "barnes":
        return _as_int(count_sym_even_barnes(a, c))
    raise ValueError(f"unknown method {method!r}")


def count_sym(a: int, c: int, method: str = "schur") -> int:
    """Symmetric plane partitions in an ``a x a x c`` box, diagonal unrestricted."""
    if method == "schur":
        return sym_qgen_schur(a, c, even=False).evaluate([1])
    if method == "brute":
        if a > 3 or c > 3:
            raise ValueError("brute force is limited to a <= 3, c <= 3")
        return sym_qgen_brute(a, c, False).evaluate([1])
    raise ValueError(f"unknown method {method!r}")


def count_box(a: int, b: int, c: int, method: str = "product") -> int:
    routes = {
        "brute": count_box_brute,
        "product": macmahon_product,
        "gamma": box_count_gamma,
        "barnes": box_count_barnes,
        "qgen": lambda a, b, c: macmahon_qgen(a, b, c).evaluate([1]),
        "schur": lambda a, b, c: qgen_via_schur(a, b, c).evaluate([1]),
    }
    if method not in routes:
        raise ValueError(f"unknown method {method!r}")
    return routes[method](a, b, c)

"""Integer partitions: frequency notation, conjugation, parity, iteration."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Instances are immutable and hashable, so they can key memo tables.
    The empty partition ``Partition()`` is valid and has weight 0.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for x, y in zip(parts, parts[1:]):
            if x < y:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> "Partition":
        """Build from an unordered sequence, dropping zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the textual form ``"3,2,1"``; the empty string is the empty partition."""
        text = text.strip().strip("()")
        if not text:
            return cls()
        return cls(int(t) for t in text.split(",") if t.strip())

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def frequencies(self) -> list[int]:
        return frequencies(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def from_frequencies(freqs: Sequence[int]) -> Partition:
    """Return ``<1^{a_1} 2^{a_2} ...>`` where ``freqs[j-1] = a_j``."""
    parts: list[int] = []
    for j in range(len(freqs), 0, -1):
        a = freqs[j - 1]
        if a < 0:
            raise ValueError("frequencies must be non-negative")
        parts.extend([j] * a)
    return Partition(parts)


def frequencies(lam: Sequence[int]) -> list[int]:
    """Inverse of :func:`from_frequencies`; the list has length ``max part``."""
    if not lam:
        return []
    out = [0] * max(lam)
    for p in lam:
        out[p - 1] += 1
    return out


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def is_even(lam: Sequence[int]) -> bool:
    return all(p % 2 == 0 for p in lam)


def is_conjugate_even(lam: Sequence[int]) -> bool:
    # conjugate even <=> every part multiplicity is even
    return all(a % 2 == 0 for a in frequencies(lam))


def alternating_sum(lam: Sequence[int]) -> int:
    """``lam_1 - lam_2 + lam_3 - ...``, the number of odd columns."""
    return sum(p if i % 2 == 0 else -p for i, p in enumerate(lam))


def iterate_partitions(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """Yield every partition of ``n`` within the caps, in reverse lexicographic order.

    >>> [tuple(p) for p in iterate_partitions(4, max_part=2)]
    [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    top = n if max_part is None else min(max_part, n)
    length = n if max_length is None else max_length

    def rec(remaining: int, cap: int, slots: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0 or cap * slots < remaining:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, top, length, [])


def partitions_up_to(max_weight: int, **caps) -> Iterator[Partition]:
    for n in range(max_weight + 1):
        yield from iterate_partitions(n, **caps)


def contained_in(lam: Sequence[int], rows: int, cols: int) -> bool:
    """True if the Young diagram of ``lam`` fits in a ``rows x cols`` rectangle."""
    return len(lam) <= rows and (not lam or lam[0] <= cols)

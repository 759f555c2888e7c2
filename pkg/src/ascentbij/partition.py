"""Integer partitions and the strip relations used by growth diagrams.

A partition is stored as a tuple of positive parts in weakly decreasing
order, so ``Partition((2, 1))`` compares equal to the plain tuple ``(2, 1)``.
Parts beyond the stored length are implicitly zero.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InvalidObjectError

__all__ = [
    "Partition",
    "EMPTY",
    "part",
    "conjugate",
    "contains",
    "is_horizontal_strip",
    "is_vertical_strip",
    "diff_cells",
    "column_count",
    "differ_by_one_square",
    "partitions_of",
    "partitions_up_to",
    "add_horizontal_strips",
    "add_vertical_strips",
    "two_square_row_extension",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``()`` is the empty partition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        # trailing zeros are allowed on input and trimmed
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise InvalidObjectError(f"partition parts must be positive integers, got {parts!r}")
            if i and parts[i - 1] < p:
                raise InvalidObjectError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        if not self:
            return "∅"
        if all(p <= 9 for p in self):
            return "".join(map(str, self))
        return "[" + ",".join(map(str, self)) + "]"


EMPTY = Partition()


def part(p: Sequence[int], i: int) -> int:
    """The ``i``-th part (1-based), zero past the end."""
    return p[i - 1] if i <= len(p) else 0


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` fits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def is_horizontal_strip(smaller: Sequence[int], larger: Sequence[int]) -> bool:
    """``larger / smaller`` has at most one cell per column (equal partitions count)."""
    if not contains(larger, smaller):
        return False
    # interleaving: larger_{i+1} <= smaller_i for every i
    return all(part(larger, i + 1) <= part(smaller, i) for i in range(1, len(larger)))


def is_vertical_strip(smaller: Sequence[int], larger: Sequence[int]) -> bool:
    """``larger / smaller`` has at most one cell per row (equal partitions count)."""
    if not contains(larger, smaller):
        return False
    return all(b - part(smaller, i) <= 1 for i, b in enumerate(larger, 1))


def diff_cells(smaller: Sequence[int], larger: Sequence[int]) -> list[tuple[int, int]]:
    """Cells of ``larger`` missing from ``smaller`` as 1-based ``(row, column)``."""
    if not contains(larger, smaller):
        raise InvalidObjectError(f"{tuple(larger)} does not contain {tuple(smaller)}")
    return [(i, j) for i, b in enumerate(larger, 1) for j in range(part(smaller, i) + 1, b + 1)]


def column_count(p: Sequence[int]) -> int:
    return p[0] if p else 0


def differ_by_one_square(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff one of ``a``, ``b`` is the other plus a single cell."""
    small, big = (a, b) if sum(a) <= sum(b) else (b, a)
    return sum(big) - sum(small) == 1 and contains(big, small)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def add_horizontal_strips(p: Sequence[int], max_cells: int) -> Iterator[Partition]:
    """Every ``q`` with ``q / p`` a horizontal strip of at most ``max_cells`` cells.

    Row ``i`` of ``q`` may grow up to ``p_{i-1}`` (unbounded for the first row),
    and row ``len(p) + 1`` may start a new row of length at most ``p_last``.
    """
    p = tuple(p)
    rows = len(p) + 1
    caps = [max_cells] + [part(p, i - 1) - part(p, i) for i in range(2, rows + 1)]

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i > rows:
            yield Partition(acc)
            return
        for extra in range(min(caps[i - 1], left) + 1):
            acc.append(part(p, i) + extra)
            yield from rec(i + 1, left - extra, acc)
            acc.pop()

    yield from rec(1, max_cells, [])


def add_vertical_strips(p: Sequence[int], max_cells: int) -> Iterator[Partition]:
    """Every ``q`` with ``q / p`` a vertical strip of at most ``max_cells`` cells."""
    for q in add_horizontal_strips(conjugate(p), max_cells):
        yield conjugate(q)


def two_square_row_extension(p: Sequence[int]) -> Partition:
    """The partition obtained from a partition with at most two columns by adding
    one cell to each of its two columns.

    This is the only horizontal strip of two cells that keeps at most two columns.
    """
    if column_count(p) > 2:
        raise InvalidObjectError(f"{tuple(p)} has more than two columns")
    cols = conjugate(p)
    return conjugate((part(cols, 1) + 1, part(cols, 2) + 1))

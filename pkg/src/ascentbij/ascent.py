"""Ascent sequences, word patterns and exhaustive generation."""
from __future__ import annotations

from itertools import groupby
from typing import Iterator, Sequence

from .errors import InvalidObjectError

__all__ = [
    "asc",
    "is_ascent_sequence",
    "check_ascent_sequence",
    "is_primitive",
    "is_pattern",
    "contains_pattern",
    "avoids",
    "enumerate_ascent_sequences",
    "run_length_decomposition",
    "primitive_contraction",
    "inflate",
]


def asc(seq: Sequence[int]) -> int:
    """Number of positions ``i`` with ``seq[i] < seq[i+1]``."""
    return sum(1 for a, b in zip(seq, seq[1:]) if a < b)


def is_ascent_sequence(seq: Sequence[int]) -> bool:
    if not seq or seq[0] != 0:
        return False
    ascents = 0
    for prev, x in zip(seq, seq[1:]):
        if not 0 <= x <= ascents + 1:
            return False
        if prev < x:
            ascents += 1
    return True


def check_ascent_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    """Return ``seq`` as a tuple or raise naming the first violated condition."""
    seq = tuple(seq)
    if not seq:
        raise InvalidObjectError("ascent sequence must be nonempty")
    if seq[0] != 0:
        raise InvalidObjectError(f"ascent sequence must start with 0, got {seq[0]}")
    ascents = 0
    for i in range(1, len(seq)):
        if not 0 <= seq[i] <= ascents + 1:
            raise InvalidObjectError(
                f"entry {i + 1} is {seq[i]} but must lie in [0, asc(prefix)+1] = [0, {ascents + 1}]"
            )
        if seq[i - 1] < seq[i]:
            ascents += 1
    return seq


def is_primitive(seq: Sequence[int]) -> bool:
    return all(a != b for a, b in zip(seq, seq[1:]))


def is_pattern(pat: Sequence[int]) -> bool:
    return bool(pat) and set(pat) == set(range(max(pat) + 1))


def _relations(pat: Sequence[int]) -> list[list[int]]:
    # rel[b][a] = sign(pat[b] - pat[a]) for a < b
    return [[(pat[b] > pat[a]) - (pat[b] < pat[a]) for a in range(b)] for b in range(len(pat))]


def _search(seq, rel, chosen, start, last=None):
    k = len(chosen)
    if k == len(rel):
        return True
    stop = len(seq)
    if last is not None and k == len(rel) - 1:
        candidates = [last] if last >= start else []
    else:
        if last is not None:
            stop = last
        candidates = range(start, stop)
    for idx in candidates:
        v = seq[idx]
        if all((v > seq[c]) - (v < seq[c]) == r for c, r in zip(chosen, rel[k])):
            chosen.append(idx)
            if _search(seq, rel, chosen, idx + 1, last):
                return True
            chosen.pop()
    return False


def contains_pattern(seq: Sequence[int], pat: Sequence[int]) -> tuple[int, ...] | None:
    """First occurrence of ``pat`` in ``seq`` as 1-based indices, or ``None``.

    Equal letters of the pattern require equal values; distinct letters require
    the same strict order. Occurrences are searched in lexicographic index order.
    """
    if not is_pattern(pat):
        raise InvalidObjectError(f"{tuple(pat)} is not a pattern: some letter in 0..max is missing")
    chosen: list[int] = []
    if _search(seq, _relations(pat), chosen, 0):
        return tuple(i + 1 for i in chosen)
    return None


def avoids(seq: Sequence[int], pat: Sequence[int]) -> bool:
    return contains_pattern(seq, pat) is None


def enumerate_ascent_sequences(
    n: int, avoid: Sequence[int] | None = None, primitive: bool = False
) -> Iterator[tuple[int, ...]]:
    """Yield the ascent sequences of length ``n`` in lexicographic order.

    With ``avoid`` only pattern-avoiding sequences are produced; a prefix is
    discarded as soon as an occurrence ends at its last entry, which is valid
    because containment is inherited by extensions.
    """
    if n < 1:
        raise InvalidObjectError(f"length must be at least 1, got {n}")
    rel = None
    if avoid is not None:
        if not is_pattern(avoid):
            raise InvalidObjectError(f"{tuple(avoid)} is not a pattern")
        rel = _relations(avoid)
    seq = [0]

    def rec(ascents: int) -> Iterator[tuple[int, ...]]:
        if len(seq) == n:
            yield tuple(seq)
            return
        prev = seq[-1]
        for x in range(ascents + 2):
            if primitive and x == prev:
                continue
            seq.append(x)
            if rel is None or not _search(seq, rel, [], 0, last=len(seq) - 1):
                yield from rec(ascents + (prev < x))
            seq.pop()

    if rel is not None and len(avoid) == 1:
        return
    yield from rec(0)


def run_length_decomposition(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs as ``(value, multiplicity)`` pairs."""
    return [(v, len(list(g))) for v, g in groupby(seq)]


def primitive_contraction(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(v for v, _ in run_length_decomposition(seq))


def inflate(values: Sequence[int], counts: Sequence[int]) -> tuple[int, ...]:
    """Inverse of the run-length decomposition."""
    if len(values) != len(counts) or any(c < 1 for c in counts):
        raise InvalidObjectError("run values and multiplicities must align and be positive")
    return tuple(v for v, c in zip(values, counts) for _ in range(c))

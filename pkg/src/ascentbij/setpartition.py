"""Set partitions of [n], their arc diagrams and crossing/nesting numbers."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidObjectError

__all__ = [
    "SetPartition",
    "ArcDiagram",
    "to_arcs",
    "from_arcs",
    "max_crossing",
    "max_nesting",
    "enumerate_set_partitions",
    "from_restricted_growth",
]


@dataclass(frozen=True)
class SetPartition:
    """Blocks of {1..n}; stored canonically (blocks sorted, ordered by minimum)."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        if any(not b for b in canon):
            raise InvalidObjectError("set partition blocks must be nonempty")
        elements = [x for b in canon for x in b]
        if n is None:
            n = len(elements)
        if sorted(elements) != list(range(1, n + 1)):
            raise InvalidObjectError(f"blocks must be disjoint and cover 1..{n}")
        object.__setattr__(self, "blocks", tuple(canon))
        object.__setattr__(self, "n", n)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, n: int, arcs: Iterable[Sequence[int]]):
        arcs = tuple(sorted((int(i), int(j)) for i, j in arcs))
        for i, j in arcs:
            if not 1 <= i < j <= n:
                raise InvalidObjectError(f"arc ({i},{j}) must satisfy 1 <= i < j <= {n}")
        lefts = [i for i, _ in arcs]
        rights = [j for _, j in arcs]
        if len(set(lefts)) != len(lefts):
            raise InvalidObjectError("two arcs share a left endpoint")
        if len(set(rights)) != len(rights):
            raise InvalidObjectError("two arcs share a right endpoint")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}


def to_arcs(p: SetPartition) -> ArcDiagram:
    return ArcDiagram(p.n, [(a, b) for blk in p.blocks for a, b in zip(blk, blk[1:])])


def from_arcs(d: ArcDiagram) -> SetPartition:
    # every vertex has at most one successor, so blocks are the successor chains
    succ = dict(d.arcs)
    has_pred = {j for _, j in d.arcs}
    blocks = []
    for start in range(1, d.n + 1):
        if start in has_pred:
            continue
        blk = [start]
        while blk[-1] in succ:
            blk.append(succ[blk[-1]])
        blocks.append(blk)
    return SetPartition(blocks, d.n)


def _longest_monotone(values: list[int], increasing: bool) -> int:
    tails: list[int] = []
    for v in values:
        key = v if increasing else -v
        k = bisect_left(tails, key)
        if k == len(tails):
            tails.append(key)
        else:
            tails[k] = key
    return len(tails)


def _max_chain(p: SetPartition, increasing: bool) -> int:
    arcs = to_arcs(p).arcs
    best = 0
    # a k-crossing or k-nesting has all left ends before all right ends, so it
    # is a monotone run among the arcs spanning some gap (t, t+1)
    for t in range(1, p.n):
        rights = [j for i, j in arcs if i <= t < j]
        if len(rights) > best:
            best = max(best, _longest_monotone(rights, increasing))
    return best


def max_crossing(p: SetPartition) -> int:
    """Largest ``k`` with arcs ``i_1<...<i_k<j_1<...<j_k``; 0 without arcs."""
    return _max_chain(p, increasing=True)


def max_nesting(p: SetPartition) -> int:
    """Largest ``k`` with arcs ``i_1<...<i_k<j_k<...<j_1``; 0 without arcs."""
    return _max_chain(p, increasing=False)


def from_restricted_growth(rgs: Sequence[int]) -> SetPartition:
    blocks: list[list[int]] = []
    for pos, b in enumerate(rgs, 1):
        if not 0 <= b <= len(blocks):
            raise InvalidObjectError(f"entry {pos} is {b} but must lie in [0, {len(blocks)}]")
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(pos)
    return SetPartition(blocks, len(rgs))


def enumerate_set_partitions(n: int) -> Iterator[SetPartition]:
    """All Bell(n) partitions, in lexicographic order of restricted growth strings."""
    if n < 1:
        raise InvalidObjectError(f"ground set size must be at least 1, got {n}")
    rgs = [0]

    def rec(top: int) -> Iterator[SetPartition]:
        if len(rgs) == n:
            yield from_restricted_growth(rgs)
            return
        for b in range(top + 2):
            rgs.append(b)
            yield from rec(max(top, b))
            rgs.pop()

    yield from rec(0)

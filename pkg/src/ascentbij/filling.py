"""Ferrers shapes in French notation, 01-fillings and chain statistics.

Coordinates
-----------
Cells are ``(row, column)``, 1-based, rows counted from the TOP of the shape
and columns from the left.  Lattice corners are ``(i, j)`` where ``i`` is the
number of rows above the corner (0 is the top edge) and ``j`` the number of
columns to its left (0 is the left edge).  Cell ``(r, c)`` therefore has
bottom-left corner ``(r, c-1)`` and top-right corner ``(r-1, c)``.

In the triangle with rows of 1, 2, ..., n cells, row ``r`` from the top has
``r`` cells; a one-1-per-row filling is carried as ``a`` with the 1 of row
``i`` in column ``a_i``.  A set partition of [n] lives on the triangle with
n-1 rows, where the arc ``(i, j)`` occupies column ``i`` of the row with
``j - 1`` cells, i.e. cell ``(j - 1, i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidObjectError
from .setpartition import ArcDiagram, SetPartition, from_arcs, to_arcs

Cell = tuple[int, int]
Corner = tuple[int, int]

__all__ = [
    "FerrersShape",
    "Filling01",
    "TriangularFilling",
    "boundary_word",
    "boundary_corners",
    "longest_ne_chain",
    "longest_se_chain",
    "triangular_to_filling",
    "filling_to_triangular",
    "is_in_N_delta",
    "arc_to_cell",
    "cell_to_arc",
    "partition_to_filling",
    "filling_to_partition",
    "render_filling",
]


@dataclass(frozen=True)
class FerrersShape:
    """Row lengths listed top to bottom (weakly increasing downwards)."""

    rows: tuple[int, ...]

    def __init__(self, rows: Iterable[int]):
        rows = tuple(rows)
        if any(r < 1 for r in rows) or any(a > b for a, b in zip(rows, rows[1:])):
            raise InvalidObjectError(
                f"row lengths {rows} must be positive and weakly increasing from top to bottom"
            )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_bottom_up(cls, lengths: Iterable[int]) -> "FerrersShape":
        return cls(tuple(lengths)[::-1])

    @classmethod
    def triangle(cls, n: int) -> "FerrersShape":
        return cls(range(1, n + 1))

    def bottom_up(self) -> list[int]:
        return list(self.rows[::-1])

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.rows[-1] if self.rows else 0

    def row_length(self, r: int) -> int:
        return self.rows[r - 1]

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= r <= self.height and 1 <= c <= self.rows[r - 1]

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.rows, 1):
            for c in range(1, length + 1):
                yield (r, c)

    def is_corner(self, corner: Corner) -> bool:
        i, j = corner
        if not 0 <= i <= self.height or j < 0:
            return False
        if i == self.height:
            return j <= self.width
        return j <= self.rows[i]

    def corners(self) -> Iterator[Corner]:
        for i in range(self.height + 1):
            top = self.width if i == self.height else self.rows[i]
            for j in range(top + 1):
                yield (i, j)


@dataclass(frozen=True)
class Filling01:
    shape: FerrersShape
    ones: frozenset[Cell]

    def __init__(self, shape: FerrersShape, ones: Iterable[Sequence[int]] = ()):
        cells = frozenset((int(r), int(c)) for r, c in ones)
        for cell in cells:
            if cell not in shape:
                raise InvalidObjectError(f"cell {cell} lies outside the shape {shape.bottom_up()}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "ones", cells)

    def __getitem__(self, cell: Cell) -> int:
        return int(cell in self.ones)

    def to_json(self) -> dict:
        return {"shape": self.shape.bottom_up(), "ones": [list(c) for c in sorted(self.ones)]}


@dataclass(frozen=True)
class TriangularFilling:
    a: tuple[int, ...]

    def __init__(self, a: Iterable[int]):
        a = tuple(a)
        for i, v in enumerate(a, 1):
            if not 1 <= v <= i:
                raise InvalidObjectError(f"a_{i} = {v} but must satisfy 1 <= a_i <= {i}")
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return len(self.a)

    def to_json(self) -> dict:
        return {"n": self.n, "a": list(self.a)}


def boundary_word(shape: FerrersShape) -> str:
    """D/R word tracing the right/up border from top-left to bottom-right."""
    out = []
    prev = 0
    for length in shape.rows:
        out.append("R" * (length - prev) + "D")
        prev = length
    return "".join(out)


def boundary_corners(shape: FerrersShape) -> list[Corner]:
    """Corners met along the border walk; one more than the word length."""
    i, j = 0, 0
    path = [(0, 0)]
    for step in boundary_word(shape):
        if step == "R":
            j += 1
        else:
            i += 1
        path.append((i, j))
    return path


def _region(f: Filling01, corner: Corner) -> list[Cell]:
    if not f.shape.is_corner(corner):
        raise InvalidObjectError(f"{corner} is not a corner of the shape")
    i, j = corner
    return [(r, c) for r, c in f.ones if r > i and c <= j]


def _longest_chain(cells: list[Cell], ne: bool) -> int:
    # sort by column, then bottom-most first; both chain orders are compatible
    cells = sorted(cells, key=lambda rc: (rc[1], -rc[0]))
    best = [1] * len(cells)
    for b, (rb, cb) in enumerate(cells):
        for a in range(b):
            ra, ca = cells[a]
            ok = (rb < ra and cb >= ca) if ne else (rb >= ra and cb > ca)
            if ok and best[a] + 1 > best[b]:
                best[b] = best[a] + 1
    return max(best, default=0)


def _maximal_corners(shape: FerrersShape) -> list[Corner]:
    return [(r - 1, length) for r, length in enumerate(shape.rows, 1)]


def longest_ne_chain(f: Filling01, corner: Corner | None = None) -> int:
    """Longest chain of 1s each strictly above and weakly right of the previous.

    With a ``corner`` only cells in the rectangle left of and below it count;
    without one the chain must fit in some such rectangle of the shape.
    """
    if corner is not None:
        return _longest_chain(_region(f, corner), ne=True)
    return max((longest_ne_chain(f, c) for c in _maximal_corners(f.shape)), default=0)


def longest_se_chain(f: Filling01, corner: Corner | None = None) -> int:
    """Longest chain of 1s each weakly below and strictly right of the previous."""
    if corner is not None:
        return _longest_chain(_region(f, corner), ne=False)
    return max((longest_se_chain(f, c) for c in _maximal_corners(f.shape)), default=0)


def triangular_to_filling(t: TriangularFilling) -> Filling01:
    return Filling01(FerrersShape.triangle(t.n), [(i, a) for i, a in enumerate(t.a, 1)])


def filling_to_triangular(f: Filling01) -> TriangularFilling:
    n = f.shape.height
    if f.shape != FerrersShape.triangle(n):
        raise InvalidObjectError("filling is not on a triangular shape")
    a = [0] * n
    for r, c in f.ones:
        if a[r - 1]:
            raise InvalidObjectError(f"row {r} contains more than one 1")
        a[r - 1] = c
    if 0 in a:
        raise InvalidObjectError(f"row {a.index(0) + 1} contains no 1")
    return TriangularFilling(a)


def is_in_N_delta(t: TriangularFilling | Sequence[int]) -> bool:
    """True iff no rows ``i<j<k`` have ``a_i >= a_j >= a_k`` (an NE-chain of length 3)."""
    a = t.a if isinstance(t, TriangularFilling) else tuple(t)
    try:
        TriangularFilling(a)
    except InvalidObjectError:
        return False
    # a 3-chain exists iff some a_j has a_i >= a_j above it and a_k <= a_j below it
    prefix_max = 0
    has_above = []
    for v in a:
        has_above.append(prefix_max >= v)
        prefix_max = max(prefix_max, v)
    suffix_min = float("inf")
    for j in range(len(a) - 1, -1, -1):
        if has_above[j] and suffix_min <= a[j]:
            return False
        suffix_min = min(suffix_min, a[j])
    return True


def arc_to_cell(arc: tuple[int, int]) -> Cell:
    """Arc ``(i, j)`` to the cell in column ``i`` of the row holding ``j - 1`` cells."""
    i, j = arc
    return (j - 1, i)


def cell_to_arc(cell: Cell) -> tuple[int, int]:
    r, c = cell
    return (c, r + 1)


def partition_to_filling(p: SetPartition) -> Filling01:
    """Filling of the triangle with ``n - 1`` rows, one 1 per arc."""
    return Filling01(FerrersShape.triangle(p.n - 1), [arc_to_cell(a) for a in to_arcs(p).arcs])


def filling_to_partition(f: Filling01) -> SetPartition:
    n = f.shape.height
    if f.shape != FerrersShape.triangle(n):
        raise InvalidObjectError("filling is not on a triangular shape")
    rows = [r for r, _ in f.ones]
    cols = [c for _, c in f.ones]
    if len(set(rows)) != len(rows):
        raise InvalidObjectError("a row of the filling contains more than one 1")
    if len(set(cols)) != len(cols):
        raise InvalidObjectError("a column of the filling contains more than one 1")
    return from_arcs(ArcDiagram(n + 1, [cell_to_arc(c) for c in f.ones]))


def render_filling(f: Filling01) -> str:
    """French-notation picture, top row first, with • for 1 and · for 0."""
    lines = []
    for r, length in enumerate(f.shape.rows, 1):
        lines.append(" ".join("•" if (r, c) in f.ones else "·" for c in range(1, length + 1)))
    return "\n".join(lines)


def _is_chain(cells: Sequence[Cell], ne: bool) -> bool:
    cells = sorted(cells, key=lambda rc: (rc[1], -rc[0]))
    for (ra, ca), (rb, cb) in zip(cells, cells[1:]):
        ok = (rb < ra and cb >= ca) if ne else (rb >= ra and cb > ca)
        if not ok:
            return False
    return True


def all_fillings(shape: FerrersShape) -> Iterator[Filling01]:
    """Every 01-filling of ``shape`` (``2**cells`` of them)."""
    cells = list(shape.cells())
    for mask in range(1 << len(cells)):
        yield Filling01(shape, [c for k, c in enumerate(cells) if mask >> k & 1])


def all_triangular(n: int) -> Iterator[TriangularFilling]:
    """Every one-1-per-row filling of the triangle with ``n`` rows (``n!`` of them)."""
    a: list[int] = []

    def rec() -> Iterator[TriangularFilling]:
        if len(a) == n:
            yield TriangularFilling(a)
            return
        for v in range(1, len(a) + 2):
            a.append(v)
            yield from rec()
            a.pop()

    yield from rec()


def has_ne_chain_geometric(f: Filling01, length: int) -> bool:
    """Direct search for ``length`` 1-cells forming an NE-chain."""
    return any(_is_chain(combo, ne=True) for combo in combinations(sorted(f.ones), length))

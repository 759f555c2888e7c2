"""Growth diagrams for 01-fillings of Ferrers shapes.

Each cell with entry ``m`` carries four corner labels::

    upsilon --- lambda
       |    m     |
     rho  ----- mu

The forward rule computes ``lambda`` from ``(rho, mu, upsilon, m)``; the
backward rule recovers ``(rho, m)`` from ``(mu, upsilon, lambda)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InvalidObjectError
from .filling import Corner, FerrersShape, Filling01, boundary_corners, boundary_word
from .partition import (
    EMPTY,
    Partition,
    column_count,
    contains,
    differ_by_one_square,
    is_horizontal_strip,
    is_vertical_strip,
    part,
)

__all__ = [
    "GrowthDiagram",
    "BoundaryClass",
    "forward_cell",
    "backward_cell",
    "forward_diagram",
    "backward_diagram",
    "boundary_sequence",
    "check_boundary",
    "classify_boundary",
    "enumerate_v_sequences",
    "render_growth",
]


def _forward(rho, mu, ups, m) -> Partition:
    carry = m
    out = []
    i = 1
    while True:
        mu_i = part(mu, i)
        ups_i = part(ups, i)
        lam_i = max(mu_i + carry, ups_i)
        if lam_i == 0:
            return Partition(out)
        out.append(lam_i)
        carry = min(mu_i + carry, ups_i) - part(rho, i)
        i += 1


def _backward(mu, ups, lam) -> tuple[list[int], int]:
    carry = 0
    rho = [0] * len(lam)
    for i in range(len(lam), 0, -1):
        mu_i = part(mu, i)
        ups_i = part(ups, i) - carry
        rho[i - 1] = min(mu_i, ups_i)
        carry = lam[i - 1] - max(mu_i, ups_i)
    return rho, carry


def _rho_from(values: list[int], mu, ups) -> Partition:
    try:
        rho = Partition(values)
    except InvalidObjectError:
        rho = None
    if rho is None or not (contains(mu, rho) and contains(ups, rho)):
        raise InvalidObjectError(
            f"inconsistent labels: mu={mu} and upsilon={ups} admit no valid lower-left label"
        )
    return rho


def forward_cell(rho: Sequence[int], mu: Sequence[int], upsilon: Sequence[int], m: int) -> Partition:
    """Forward local rule: the label ``lambda`` of the top-right corner."""
    if m not in (0, 1):
        raise InvalidObjectError(f"cell entry must be 0 or 1, got {m}")
    if not is_horizontal_strip(rho, mu):
        raise InvalidObjectError(f"mu={tuple(mu)} is not rho={tuple(rho)} plus a horizontal strip")
    if not is_vertical_strip(rho, upsilon):
        raise InvalidObjectError(f"upsilon={tuple(upsilon)} is not rho={tuple(rho)} plus a vertical strip")
    return _forward(rho, mu, upsilon, m)


def backward_cell(
    mu: Sequence[int], upsilon: Sequence[int], lam: Sequence[int]
) -> tuple[Partition, int]:
    """Backward local rule: ``(rho, m)`` for the bottom-left corner and the entry."""
    if not is_vertical_strip(mu, lam):
        raise InvalidObjectError(f"lambda={tuple(lam)} is not mu={tuple(mu)} plus a vertical strip")
    if not is_horizontal_strip(upsilon, lam):
        raise InvalidObjectError(
            f"lambda={tuple(lam)} is not upsilon={tuple(upsilon)} plus a horizontal strip"
        )
    values, m = _backward(mu, upsilon, lam)
    if m not in (0, 1):
        raise InvalidObjectError(f"labels mu={mu}, upsilon={upsilon}, lambda={lam} give cell entry {m}")
    return _rho_from(values, mu, upsilon), m


@dataclass
class GrowthDiagram:
    shape: FerrersShape
    filling: Filling01
    corners: dict[Corner, Partition] = field(default_factory=dict)

    @property
    def boundary(self) -> tuple[Partition, ...]:
        return tuple(self.corners[c] for c in boundary_corners(self.shape))

    def to_json(self) -> dict:
        grid = []
        for i in range(self.shape.height + 1):
            top = self.shape.width if i == self.shape.height else self.shape.rows[i]
            grid.append([list(self.corners[(i, j)]) for j in range(top + 1)])
        return {"shape": self.shape.bottom_up(), "filling": self.filling.to_json(), "corners": grid}


def forward_diagram(f: Filling01) -> tuple[GrowthDiagram, tuple[Partition, ...]]:
    """Label every corner from the filling; return the diagram and its border labels."""
    shape = f.shape
    labels: dict[Corner, Partition] = {}
    h = shape.height
    for j in range(shape.width + 1):
        labels[(h, j)] = EMPTY
    for i in range(h):
        labels[(i, 0)] = EMPTY
    ones = f.ones
    # bottom row first, left to right: rho, mu and upsilon are ready before lambda
    for r in range(h, 0, -1):
        for c in range(1, shape.rows[r - 1] + 1):
            labels[(r - 1, c)] = _forward(
                labels[(r, c - 1)], labels[(r, c)], labels[(r - 1, c - 1)], int((r, c) in ones)
            )
    diagram = GrowthDiagram(shape, f, labels)
    return diagram, diagram.boundary


def boundary_sequence(f: Filling01) -> tuple[Partition, ...]:
    return forward_diagram(f)[1]


def check_boundary(shape: FerrersShape, boundary: Sequence[Sequence[int]]) -> tuple[Partition, ...]:
    """Validate a border labelling against the step rules for ``shape``.

    Along the border word an R step adds a horizontal strip or nothing and a D
    step deletes a vertical strip or nothing; both ends are empty.
    """
    word = boundary_word(shape)
    seq = tuple(Partition(p) for p in boundary)
    if len(seq) != len(word) + 1:
        raise InvalidObjectError(
            f"border of a shape with word {word or '(empty)'} needs {len(word) + 1} labels, got {len(seq)}"
        )
    if seq[0] or seq[-1]:
        raise InvalidObjectError("border labelling must start and end with the empty partition")
    for k, step in enumerate(word, 1):
        prev, cur = seq[k - 1], seq[k]
        if step == "R" and not is_horizontal_strip(prev, cur):
            raise InvalidObjectError(f"step {k} (R): {cur} is not {prev} plus a horizontal strip")
        if step == "D" and not is_vertical_strip(cur, prev):
            raise InvalidObjectError(f"step {k} (D): {cur} is not {prev} minus a vertical strip")
    return seq


def backward_diagram(shape: FerrersShape, boundary: Sequence[Sequence[int]]) -> Filling01:
    """Reconstruct the unique filling whose forward border labelling is ``boundary``."""
    seq = check_boundary(shape, boundary)
    labels: dict[Corner, Partition] = dict(zip(boundary_corners(shape), seq))
    ones = []
    # top row first, right to left
    for r in range(1, shape.height + 1):
        for c in range(shape.rows[r - 1], 0, -1):
            mu, ups, lam = labels[(r, c)], labels[(r - 1, c - 1)], labels[(r - 1, c)]
            values, m = _backward(mu, ups, lam)
            if m not in (0, 1):
                raise InvalidObjectError(f"cell ({r},{c}) receives entry {m}; the border is inconsistent")
            labels[(r, c - 1)] = _rho_from(values, mu, ups)
            if m:
                ones.append((r, c))
    edge = [(r, 0) for r in range(1, shape.height + 1)] + [(shape.height, j) for j in range(shape.width)]
    for corner in edge:
        if labels[corner]:
            raise InvalidObjectError(f"edge corner {corner} receives {labels[corner]}, expected the empty partition")
    return Filling01(shape, ones)


@dataclass(frozen=True)
class BoundaryClass:
    """Which border-sequence families a sequence of length ``2n+1`` belongs to.

    ``t1``: R steps add a horizontal strip or nothing, D steps delete a vertical
    strip or nothing.  ``t2``: as ``t1`` but every D step deletes exactly one
    square (one 1 in every row).  ``t3``: every step changes at most one square.
    ``max_columns`` bounds the families that also limit the number of columns.
    """

    n: int
    t1: bool
    t2: bool
    t3: bool
    max_columns: int

    def t5(self, k: int) -> bool:
        return self.t2 and self.max_columns <= k

    def t6(self, k: int) -> bool:
        return self.t3 and self.max_columns <= k

    @property
    def v(self) -> bool:
        return self.t6(2)

    def flags(self, k: int | None = None) -> frozenset[str]:
        k = max(self.max_columns, 1) if k is None else k
        out = set()
        if self.t1:
            out.add("T1")
        if self.t2:
            out.add("T2")
        if self.t3:
            out.add("T3")
        if self.t5(k):
            out.add(f"T5({k})")
        if self.t6(k):
            out.add(f"T6({k})")
        if self.v:
            out.add(f"V_{self.n}")
        return frozenset(out)


def classify_boundary(seq: Sequence[Sequence[int]], n: int) -> BoundaryClass:
    """Classify a sequence against the border families of the triangle with ``n`` rows."""
    seq = [Partition(p) for p in seq]
    if len(seq) != 2 * n + 1:
        raise InvalidObjectError(f"expected {2 * n + 1} labels for n={n}, got {len(seq)}")
    ends = not seq[0] and not seq[-1]
    t1 = t2 = t3 = ends
    for i in range(n):
        a, b, c = seq[2 * i], seq[2 * i + 1], seq[2 * i + 2]
        up_ok = is_horizontal_strip(a, b)
        down_ok = is_vertical_strip(c, b)
        t1 = t1 and up_ok and down_ok
        t2 = t2 and up_ok and contains(b, c) and b.size - c.size == 1
        t3 = t3 and (a == b or differ_by_one_square(a, b) and contains(b, a)) and (
            b == c or differ_by_one_square(b, c) and contains(b, c)
        )
    return BoundaryClass(n, t1, t2, t3, max((column_count(p) for p in seq), default=0))


def enumerate_v_sequences(n: int) -> Iterator[tuple[Partition, ...]]:
    """All sequences of length ``2n+1`` from empty to empty with at most two
    columns, odd steps adding at most a square and even steps deleting at most one."""

    def grow(p: Partition) -> list[Partition]:
        out = [p]
        for i in range(len(p) + 1):
            q = list(p) + [0]
            q[i] += 1
            if (i == 0 or q[i] <= q[i - 1]) and q[0] <= 2:
                out.append(Partition(q))
        return out

    def shrink(p: Partition) -> list[Partition]:
        out = [p]
        for i in range(len(p)):
            if i == len(p) - 1 or p[i] > p[i + 1]:
                q = list(p)
                q[i] -= 1
                out.append(Partition(q))
        return out

    seq = [EMPTY]

    def rec(step: int) -> Iterator[tuple[Partition, ...]]:
        if step == n:
            if not seq[-1]:
                yield tuple(seq)
            return
        # size can drop by at most one per remaining D step
        for b in grow(seq[-1]):
            for c in shrink(b):
                if c.size > n - step - 1:
                    continue
                seq.extend((b, c))
                yield from rec(step + 1)
                del seq[-2:]

    yield from rec(0)


def render_growth(diagram: GrowthDiagram) -> str:
    """Corner-label grid with cell entries in between, top row first."""
    shape = diagram.shape
    h = shape.height
    labels = {c: str(p) for c, p in diagram.corners.items()}
    width = max((len(s) for s in labels.values()), default=1)
    lines = []
    for i in range(h + 1):
        top = shape.width if i == h else shape.rows[i]
        lines.append("  ".join(labels[(i, j)].ljust(width) for j in range(top + 1)).rstrip())
        if i < h:
            cells = []
            for c in range(1, shape.rows[i] + 1):
                cells.append("•" if (i + 1, c) in diagram.filling.ones else "·")
            pad = " " * (width // 2 + 1)
            lines.append(pad + (" " * (width + 1)).join(cells))
    return "\n".join(lines)

"""The maps between 210-avoiding ascent sequences and 3-nonnesting set partitions.

The pipeline for an ascent sequence ``x`` of length ``n + 1``:

1. split ``x`` into runs; the run values form a primitive sequence ``x'``
2. ``phi(x')`` is a one-1-per-row filling of the triangle with ``k`` rows
3. its border labelling ``lambda`` (growth diagram) has at most two columns
4. two-square R steps are flattened into ``mu``; run lengths pad ``mu`` to
   ``rho``, a border labelling of the triangle with ``n`` rows
5. the backward growth algorithm turns ``rho`` into a filling with at most one
   1 per row and column, read off as the arcs of a set partition of [n+1]
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ascent import check_ascent_sequence, contains_pattern, inflate, is_primitive, run_length_decomposition
from .errors import InvalidObjectError
from .filling import (
    FerrersShape,
    Filling01,
    TriangularFilling,
    filling_to_partition,
    filling_to_triangular,
    is_in_N_delta,
    partition_to_filling,
    triangular_to_filling,
)
from .growth import backward_diagram, boundary_sequence, classify_boundary
from .partition import EMPTY, Partition, two_square_row_extension
from .setpartition import SetPartition, max_nesting

__all__ = [
    "PATTERN_210",
    "phi",
    "phi_inverse",
    "psi",
    "psi_inverse",
    "ascent_to_partition",
    "partition_to_ascent",
    "BijectionTrace",
    "trace_ascent_to_partition",
    "trace_partition_to_ascent",
]

PATTERN_210 = (2, 1, 0)


def _check_avoider(x: Sequence[int]) -> tuple[int, ...]:
    x = check_ascent_sequence(x)
    occ = contains_pattern(x, PATTERN_210)
    if occ is not None:
        raise InvalidObjectError(f"sequence contains the pattern 210 at positions {occ}")
    return x


def phi(x: Sequence[int]) -> TriangularFilling:
    """``a_i = i + x_{i+1} - asc(x_1..x_{i+1})`` for a primitive 210-avoider."""
    x = _check_avoider(x)
    if len(x) < 2:
        raise InvalidObjectError("phi needs a sequence of length at least 2")
    if not is_primitive(x):
        raise InvalidObjectError("phi needs a primitive sequence (no equal adjacent entries)")
    a = []
    ascents = 0
    for i in range(1, len(x)):
        ascents += x[i - 1] < x[i]
        a.append(i + x[i] - ascents)
    return TriangularFilling(a)


def phi_inverse(t: TriangularFilling | Sequence[int]) -> tuple[int, ...]:
    a = t.a if isinstance(t, TriangularFilling) else tuple(t)
    if not a:
        raise InvalidObjectError("phi_inverse needs at least one row")
    if not is_in_N_delta(a):
        raise InvalidObjectError("filling has a row without exactly one 1 or an NE-chain of length 3")
    x = [0, 1]
    ascents = 1
    for i in range(2, len(a) + 1):
        if a[i - 2] < a[i - 1]:
            nxt = ascents + 1 + a[i - 1] - i
        else:
            nxt = ascents + a[i - 1] - i
        ascents += x[-1] < nxt
        x.append(nxt)
    return tuple(x)


def _flatten_double_steps(lam: Sequence[Partition]) -> list[Partition]:
    mu = list(lam)
    for i in range(0, len(lam) - 1, 2):
        if lam[i + 1].size - lam[i].size == 2:
            mu[i + 1] = lam[i + 2]
    return mu


def _pad(mu: Sequence[Partition], counts: Sequence[int]) -> list[Partition]:
    rho: list[Partition] = []
    for i, c in enumerate(counts):
        rho.extend([mu[2 * i]] * (2 * (c - 1)))
        rho.append(mu[2 * i])
        if 2 * i + 1 < len(mu):
            rho.append(mu[2 * i + 1])
    return rho


def _psi_stages(x: Sequence[int]):
    x = _check_avoider(x)
    runs = run_length_decomposition(x)
    n = len(x) - 1
    if len(runs) == 1:
        return runs, None, None, None, None, (EMPTY,) * (2 * n + 1)
    primitive = tuple(v for v, _ in runs)
    t = phi(primitive)
    lam = boundary_sequence(triangular_to_filling(t))
    mu = _flatten_double_steps(lam)
    rho = tuple(_pad(mu, [c for _, c in runs]))
    return runs, primitive, t, lam, tuple(mu), rho


def psi(x: Sequence[int]) -> tuple[Partition, ...]:
    """Border sequence of length ``2n+1`` for a 210-avoider of length ``n+1``."""
    return _psi_stages(x)[-1]


def _survivors(rho: Sequence[Partition]) -> list[int]:
    n = (len(rho) - 1) // 2
    # flags are computed on the original indices and removed all at once
    return [i for i in range(n) if not rho[2 * i] == rho[2 * i + 1] == rho[2 * i + 2]] + [n]


def _psi_inverse_stages(v: Sequence[Sequence[int]]):
    rho = tuple(Partition(p) for p in v)
    if len(rho) % 2 == 0:
        raise InvalidObjectError(f"sequence length {len(rho)} is not of the form 2n+1")
    n = (len(rho) - 1) // 2
    if not classify_boundary(rho, n).v:
        raise InvalidObjectError(
            "sequence is not in V_n: needs empty ends, at most two columns, odd steps "
            "adding at most a square and even steps deleting at most a square"
        )
    if not any(rho):
        return None, None, None, None, (0,) * (n + 1)
    j = _survivors(rho)
    m = len(j) - 1
    mu = []
    for i in range(m):
        mu += [rho[2 * j[i]], rho[2 * j[i] + 1]]
    mu.append(rho[2 * j[m]])
    ups = list(mu)
    for i in range(m):
        if rho[2 * j[i] + 1] == rho[2 * j[i + 1]]:
            ups[2 * i + 1] = two_square_row_extension(ups[2 * i])
    ups = tuple(ups)
    if not classify_boundary(ups, m).t5(2):
        raise InvalidObjectError("reconstructed border sequence violates the one-1-per-row step rules")
    t = filling_to_triangular(backward_diagram(FerrersShape.triangle(m), ups))
    y = phi_inverse(t)
    counts = [j[0] + 1] + [j[i] - j[i - 1] for i in range(1, m + 1)]
    return tuple(mu), ups, t, y, inflate(y, counts)


def psi_inverse(v: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return _psi_inverse_stages(v)[-1]


def ascent_to_partition(x: Sequence[int]) -> SetPartition:
    """Set partition of [len(x)] with no 3-nesting."""
    rho = psi(x)
    n = (len(rho) - 1) // 2
    return filling_to_partition(backward_diagram(FerrersShape.triangle(n), rho))


def partition_to_ascent(p: SetPartition) -> tuple[int, ...]:
    if max_nesting(p) >= 3:
        raise InvalidObjectError("set partition contains a 3-nesting")
    return psi_inverse(boundary_sequence(partition_to_filling(p)))


@dataclass
class BijectionTrace:
    """Every intermediate stage of one run of the bijection (either direction)."""

    input: object
    ascent: tuple[int, ...] | None = None
    rle: list[tuple[int, int]] | None = None
    primitive: tuple[int, ...] | None = None
    a_vector: TriangularFilling | None = None
    lambda_seq: tuple[Partition, ...] | None = None
    mu_seq: tuple[Partition, ...] | None = None
    rho_seq: tuple[Partition, ...] | None = None
    filling: Filling01 | None = None
    partition: SetPartition | None = None

    def problems(self) -> list[str]:
        """Stage pairs that disagree with the map between them."""
        out = []
        if self.ascent is not None and self.rle is not None:
            if run_length_decomposition(self.ascent) != self.rle:
                out.append("rle does not decompose the ascent sequence")
        if self.rle is not None and self.primitive is not None:
            if tuple(v for v, _ in self.rle) != self.primitive:
                out.append("primitive is not the run-value track")
        if self.primitive is not None and self.a_vector is not None:
            if phi(self.primitive) != self.a_vector:
                out.append("a_vector is not phi(primitive)")
        if self.a_vector is not None and self.lambda_seq is not None:
            if boundary_sequence(triangular_to_filling(self.a_vector)) != self.lambda_seq:
                out.append("lambda_seq is not the border of the a_vector filling")
        if self.lambda_seq is not None and self.mu_seq is not None:
            if tuple(_flatten_double_steps(self.lambda_seq)) != self.mu_seq:
                out.append("mu_seq is not lambda_seq with two-square steps flattened")
        if self.mu_seq is not None and self.rle is not None and self.rho_seq is not None:
            if tuple(_pad(self.mu_seq, [c for _, c in self.rle])) != self.rho_seq:
                out.append("rho_seq is not mu_seq padded by the run lengths")
        if self.rho_seq is not None and self.filling is not None:
            if boundary_sequence(self.filling) != self.rho_seq:
                out.append("filling border is not rho_seq")
        if self.filling is not None and self.partition is not None:
            if partition_to_filling(self.partition) != self.filling:
                out.append("partition does not match the filling")
        return out

    def to_json(self) -> dict:
        seqs = lambda s: None if s is None else [list(p) for p in s]
        return {
            "input": self.input,
            "ascent": None if self.ascent is None else list(self.ascent),
            "rle": None if self.rle is None else [list(r) for r in self.rle],
            "primitive": None if self.primitive is None else list(self.primitive),
            "a_vector": None if self.a_vector is None else list(self.a_vector.a),
            "lambda_seq": seqs(self.lambda_seq),
            "mu_seq": seqs(self.mu_seq),
            "rho_seq": seqs(self.rho_seq),
            "filling": None if self.filling is None else self.filling.to_json(),
            "partition": None if self.partition is None else self.partition.to_json(),
        }


def trace_ascent_to_partition(x: Sequence[int]) -> BijectionTrace:
    runs, primitive, t, lam, mu, rho = _psi_stages(x)
    n = (len(rho) - 1) // 2
    f = backward_diagram(FerrersShape.triangle(n), rho)
    return BijectionTrace(
        input=list(x),
        ascent=tuple(x),
        rle=runs,
        primitive=primitive,
        a_vector=t,
        lambda_seq=lam,
        mu_seq=mu,
        rho_seq=rho,
        filling=f,
        partition=filling_to_partition(f),
    )


def trace_partition_to_ascent(p: SetPartition) -> BijectionTrace:
    if max_nesting(p) >= 3:
        raise InvalidObjectError("set partition contains a 3-nesting")
    f = partition_to_filling(p)
    rho = boundary_sequence(f)
    mu, ups, t, y, x = _psi_inverse_stages(rho)
    return BijectionTrace(
        input=p.to_json(),
        ascent=x,
        rle=run_length_decomposition(x),
        primitive=y,
        a_vector=t,
        lambda_seq=ups,
        mu_seq=mu,
        rho_seq=rho,
        filling=f,
        partition=p,
    )

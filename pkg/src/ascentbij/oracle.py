"""Brute-force cross-checks that do not share code with the main pipeline.

Everything here is re-derived from the definitions: ascent sequences by
filtering all candidate words, pattern containment by trying every index
subset, nestings by trying every set of arcs, and chain lengths by trying
every subset of 1-cells.  Only :func:`verify_conjecture` calls into the
bijection, which is the code under test.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

__all__ = [
    "VerificationReport",
    "brute_ascent_sequences",
    "brute_contains",
    "brute_set_partitions",
    "brute_max_nesting",
    "brute_max_crossing",
    "count_avoiders",
    "count_k_nonnesting",
    "count_k_noncrossing",
    "brute_force_ne_chain",
    "brute_force_se_chain",
    "verify_conjecture",
    "format_reports",
]


def brute_ascent_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Filter every word with ``0 <= x_i <= i - 1`` against the definition."""
    for x in product(*(range(i) for i in range(1, n + 1))):
        if x[0] != 0:
            continue
        ok = True
        for i in range(1, n):
            ascents = sum(1 for a, b in zip(x[:i], x[1:i]) if a < b)
            if x[i] > ascents + 1:
                ok = False
                break
        if ok:
            yield x


def _order_isomorphic(sub: Sequence[int], pat: Sequence[int]) -> bool:
    k = len(pat)
    for a in range(k):
        for b in range(a + 1, k):
            if (sub[a] < sub[b]) != (pat[a] < pat[b]) or (sub[a] == sub[b]) != (pat[a] == pat[b]):
                return False
    return True


def brute_contains(seq: Sequence[int], pat: Sequence[int]) -> bool:
    return any(_order_isomorphic(sub, pat) for sub in combinations(seq, len(pat)))


def count_avoiders(n: int, pat: Sequence[int]) -> int:
    return sum(1 for x in brute_ascent_sequences(n) if not brute_contains(x, pat))


def brute_set_partitions(n: int) -> Iterator[tuple[frozenset[int], ...]]:
    """Insert each element into an existing block or a new one."""
    if n == 0:
        yield ()
        return
    for smaller in brute_set_partitions(n - 1):
        for k in range(len(smaller)):
            yield smaller[:k] + (smaller[k] | {n},) + smaller[k + 1:]
        yield smaller + (frozenset({n}),)


def _arcs(blocks) -> list[tuple[int, int]]:
    out = []
    for b in blocks:
        s = sorted(b)
        out.extend(zip(s, s[1:]))
    return out


def _max_k(arcs, pred) -> int:
    best = 1 if arcs else 0
    k = 2
    while k <= len(arcs):
        if not any(pred(sorted(c)) for c in combinations(arcs, k)):
            break
        best = k
        k += 1
    return best


def brute_max_nesting(blocks) -> int:
    def nests(c):
        return all(c[t][0] < c[t + 1][0] and c[t + 1][1] < c[t][1] for t in range(len(c) - 1))

    return _max_k(_arcs(blocks), nests)


def brute_max_crossing(blocks) -> int:
    def crosses(c):
        return (
            all(c[t][0] < c[t + 1][0] for t in range(len(c) - 1))
            and c[-1][0] < c[0][1]
            and all(c[t][1] < c[t + 1][1] for t in range(len(c) - 1))
        )

    return _max_k(_arcs(blocks), crosses)


def count_k_nonnesting(n: int, k: int) -> int:
    return sum(1 for p in brute_set_partitions(n) if brute_max_nesting(p) < k)


def count_k_noncrossing(n: int, k: int) -> int:
    return sum(1 for p in brute_set_partitions(n) if brute_max_crossing(p) < k)


def _chain_ok(cells, ne: bool) -> bool:
    # a set is a chain iff some ordering works; try them all
    for order in permutations(cells):
        good = True
        for (ra, ca), (rb, cb) in zip(order, order[1:]):
            step = (rb < ra and cb >= ca) if ne else (rb >= ra and cb > ca)
            if not step:
                good = False
                break
        if good:
            return True
    return False


def _brute_chain(f, corner, ne: bool) -> int:
    ones = sorted(f.ones)
    if corner is not None:
        i, j = corner
        ones = [(r, c) for r, c in ones if r > i and c <= j]
    rows = f.shape.rows

    def fits(cells) -> bool:
        if corner is not None:
            return True
        # the bounding rectangle must lie inside the shape
        top = min(r for r, _ in cells)
        right = max(c for _, c in cells)
        return right <= rows[top - 1]

    best = 0
    for k in range(1, len(ones) + 1):
        if any(fits(c) and _chain_ok(c, ne) for c in combinations(ones, k)):
            best = k
        else:
            break
    return best


def brute_force_ne_chain(f, corner=None) -> int:
    """Longest NE-chain by trying every subset of 1-cells."""
    return _brute_chain(f, corner, ne=True)


def brute_force_se_chain(f, corner=None) -> int:
    return _brute_chain(f, corner, ne=False)


@dataclass
class VerificationReport:
    n: int
    left_count: int
    right_count: int
    roundtrip_failures: list = field(default_factory=list)
    image_mismatches: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def success(self) -> bool:
        return self.left_count == self.right_count and not self.roundtrip_failures and not self.image_mismatches

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "left_count": self.left_count,
            "right_count": self.right_count,
            "roundtrip_failures": [str(x) for x in self.roundtrip_failures],
            "image_mismatches": [str(x) for x in self.image_mismatches],
            "elapsed": round(self.elapsed, 6),
            "success": self.success,
        }


def _verify_one(n: int) -> VerificationReport:
    from .bijection import ascent_to_partition, partition_to_ascent
    from .setpartition import SetPartition

    start = time.perf_counter()
    left = [x for x in brute_ascent_sequences(n) if not brute_contains(x, (2, 1, 0))]
    right = {SetPartition(p, n) for p in brute_set_partitions(n) if brute_max_nesting(p) < 3}
    report = VerificationReport(n, len(left), len(right))
    image = {}
    for x in left:
        try:
            p = ascent_to_partition(x)
        except ValueError as exc:
            report.roundtrip_failures.append((x, f"forward map failed: {exc}"))
            continue
        if p in image:
            report.image_mismatches.append((x, image[p], "same image"))
        image[p] = x
        if p not in right:
            report.image_mismatches.append((x, p, "image has a 3-nesting"))
    for p in right - image.keys():
        report.image_mismatches.append((p, "not hit"))
    for p in right:
        try:
            y = partition_to_ascent(p)
        except ValueError as exc:
            report.roundtrip_failures.append((p, f"inverse map failed: {exc}"))
            continue
        if image.get(p) != y:
            report.roundtrip_failures.append((p, y, image.get(p)))
    report.elapsed = time.perf_counter() - start
    return report


def verify_conjecture(n_max: int, jobs: int = 1) -> list[VerificationReport]:
    """Counts and pointwise bijectivity for every ``n <= n_max``."""
    sizes = range(1, n_max + 1)
    if jobs <= 1:
        return [_verify_one(n) for n in sizes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_one, sizes))


def format_reports(reports: Sequence[VerificationReport]) -> str:
    """One ``n  left  right  status`` row per size; timings are in the JSON form."""
    lines = ["n  left  right  status"]
    for r in reports:
        lines.append(f"{r.n}  {r.left_count}  {r.right_count}  {'OK' if r.success else 'FAIL'}")
    return "\n".join(lines)

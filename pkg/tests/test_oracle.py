import random

from ascentbij.filling import FerrersShape, Filling01, TriangularFilling, longest_ne_chain, longest_se_chain, partition_to_filling, triangular_to_filling
from ascentbij.oracle import (
    brute_ascent_sequences,
    brute_contains,
    brute_force_ne_chain,
    brute_force_se_chain,
    count_avoiders,
    count_k_nonnesting,
    format_reports,
    verify_conjecture,
)
from ascentbij.setpartition import SetPartition


def test_count_examples():
    assert count_avoiders(5, (1, 0, 1)) == 42
    assert count_avoiders(1, (2, 1, 0)) == 1
    assert count_avoiders(6, (2, 1, 0)) == 202
    assert count_k_nonnesting(6, 3) == 202
    assert count_k_nonnesting(4, 2) == 14
    assert count_k_nonnesting(1, 3) == 1


def test_conjecture_counts_up_to_8():
    expected = [1, 2, 5, 15, 52, 202, 859, 3930]
    assert [count_avoiders(n, (2, 1, 0)) for n in range(1, 9)] == expected
    assert [count_k_nonnesting(n, 3) for n in range(1, 9)] == expected


def test_brute_generators():
    assert list(brute_ascent_sequences(3)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert brute_contains((0, 1, 2, 1, 0), (2, 1, 0))
    assert not brute_contains((0, 1, 0, 1), (2, 1, 0))
    assert brute_contains((0, 1, 0, 1), (0, 1, 0, 1))


def test_brute_chain_examples():
    shape = FerrersShape.triangle(3)
    assert brute_force_ne_chain(Filling01(shape)) == 0
    assert brute_force_se_chain(Filling01(shape)) == 0
    ten_point = partition_to_filling(SetPartition([[1, 2, 3, 4, 6, 10], [5, 8], [7, 9]]))
    assert brute_force_ne_chain(ten_point) == 2
    assert brute_force_ne_chain(triangular_to_filling(TriangularFilling((1, 2, 3)))) == 1


def test_brute_chain_matches_dp_on_random_fillings():
    rng = random.Random(3)
    for _ in range(200):
        rows = sorted(rng.randint(1, 4) for _ in range(rng.randint(1, 4)))
        shape = FerrersShape(rows)
        ones = [c for c in shape.cells() if rng.random() < 0.4]
        f = Filling01(shape, ones)
        assert brute_force_ne_chain(f) == longest_ne_chain(f)
        assert brute_force_se_chain(f) == longest_se_chain(f)
        for c in shape.corners():
            assert brute_force_ne_chain(f, c) == longest_ne_chain(f, c)
            assert brute_force_se_chain(f, c) == longest_se_chain(f, c)


def test_verify_conjecture_small():
    reports = verify_conjecture(2)
    assert [(r.left_count, r.right_count) for r in reports] == [(1, 1), (2, 2)]
    assert all(r.success for r in reports)
    assert verify_conjecture(1)[0].left_count == 1
    final = verify_conjecture(6)[-1]
    assert (final.n, final.left_count, final.right_count, final.success) == (6, 202, 202, True)


def test_verify_parallel_matches_serial():
    serial = verify_conjecture(6)
    parallel = verify_conjecture(6, jobs=2)
    assert [(r.n, r.left_count, r.right_count, r.success) for r in serial] == [
        (r.n, r.left_count, r.right_count, r.success) for r in parallel
    ]


def test_format_reports():
    text = format_reports(verify_conjecture(6))
    assert text.splitlines()[0] == "n  left  right  status"
    assert text.endswith("6  202  202  OK")

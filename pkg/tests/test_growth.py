import random

import pytest
from hypothesis import given, settings, strategies as st

import helpers
from ascentbij.ascent import enumerate_ascent_sequences
from ascentbij.errors import InvalidObjectError
from ascentbij.filling import FerrersShape, Filling01, all_fillings, all_triangular, triangular_to_filling
from ascentbij.growth import (
    backward_cell,
    backward_diagram,
    boundary_sequence,
    check_boundary,
    classify_boundary,
    enumerate_v_sequences,
    forward_cell,
    forward_diagram,
    render_growth,
)
from ascentbij.partition import Partition
from ascentbij.serialize import parse_partition_sequence

SHAPE_4322 = FerrersShape.from_bottom_up([4, 3, 2, 2])
FILLING_4322 = Filling01(SHAPE_4322, [(1, 1), (2, 2), (4, 2), (4, 4)])
BOUNDARY_4322 = parse_partition_sequence("(∅,1,21,2,1,1,1,11,∅)")
NINE_ROW_A = (1, 2, 3, 1, 4, 4, 5, 7, 6)
NINE_ROW_BOUNDARY = parse_partition_sequence("(∅,2,1,2,1,2,1,21,2,21,11,111,11,21,2,2,1,1,∅)")
V12 = parse_partition_sequence("(∅,∅,∅,1,1,2,1,2,1,2,2,21,11,111,11,11,11,11,11,21,2,2,1,1,∅)")


@pytest.mark.parametrize(
    "rho, mu, ups, m, lam",
    [((), (), (), 1, (1,)), ((), (2,), (1,), 0, (2, 1)), ((1,), (1,), (1,), 1, (2,))],
)
def test_forward_cell_examples(rho, mu, ups, m, lam):
    assert forward_cell(rho, mu, ups, m) == lam


def test_backward_cell_examples():
    assert backward_cell((2,), (1,), (2, 1)) == ((), 0)
    assert backward_cell((), (), (1,)) == ((), 1)
    for p in [(), (1,), (2, 1), (3, 3, 1)]:
        assert backward_cell(p, p, p) == (Partition(p), 0)


def test_cell_rules_reject_bad_input():
    with pytest.raises(InvalidObjectError):
        forward_cell((), (1, 1), (), 0)  # not a horizontal strip
    with pytest.raises(InvalidObjectError):
        forward_cell((), (), (2,), 0)  # not a vertical strip
    with pytest.raises(InvalidObjectError):
        forward_cell((), (), (), 2)
    with pytest.raises(InvalidObjectError):
        backward_cell((), (), (2,))
    with pytest.raises(InvalidObjectError):
        backward_cell((2,), (1,), (1,))  # lambda does not contain mu


def test_backward_cell_total_on_valid_triples():
    from ascentbij.partition import contains, is_horizontal_strip, is_vertical_strip, partitions_up_to

    ps = list(partitions_up_to(5))
    for lam in ps:
        for mu in ps:
            if not (contains(lam, mu) and is_vertical_strip(mu, lam)):
                continue
            for ups in ps:
                if contains(lam, ups) and is_horizontal_strip(ups, lam):
                    rho, m = backward_cell(mu, ups, lam)
                    assert m in (0, 1)
                    assert forward_cell(rho, mu, ups, m) == lam


def test_local_inversion_exhaustive():
    bad, count = helpers.local_inversion_failures(6)
    assert count > 1000
    assert bad == []


def test_forward_cell_output_strips():
    from ascentbij.partition import is_horizontal_strip, is_vertical_strip

    for rho, mu, ups, m in helpers.local_quadruples(5):
        lam = forward_cell(rho, mu, ups, m)
        assert is_vertical_strip(mu, lam) and is_horizontal_strip(ups, lam)
        assert lam.size == mu.size + ups.size - rho.size + m


def test_single_square_properties():
    assert helpers.single_square_failures(6) == []
    # every premise is exercised
    hits = {name: 0 for name in "abcdef"}
    for rho, mu, ups, m in helpers.local_quadruples(4):
        one = lambda s, b: b.size == s.size + 1
        hits["a"] += m == 0 and rho == ups
        hits["b"] += m == 1 and rho == ups
        hits["c"] += m == 0 and one(rho, ups)
        hits["d"] += m == 0 and rho == mu
        hits["e"] += m == 1 and rho == mu
        hits["f"] += m == 0 and one(rho, mu)
    assert min(hits.values()) > 0


def test_4322_filling_forward_and_backward():
    diagram, boundary = forward_diagram(FILLING_4322)
    assert boundary == BOUNDARY_4322
    assert diagram.boundary == BOUNDARY_4322
    assert backward_diagram(SHAPE_4322, BOUNDARY_4322) == FILLING_4322


def test_nine_row_filling_forward_and_backward():
    f = triangular_to_filling_from(NINE_ROW_A)
    assert boundary_sequence(f) == NINE_ROW_BOUNDARY
    assert backward_diagram(FerrersShape.triangle(9), NINE_ROW_BOUNDARY) == f


def triangular_to_filling_from(a):
    from ascentbij.filling import TriangularFilling

    return triangular_to_filling(TriangularFilling(a))


def test_empty_filling_labels_all_empty():
    diagram, boundary = forward_diagram(Filling01(SHAPE_4322))
    assert set(diagram.corners.values()) == {Partition()}
    assert backward_diagram(SHAPE_4322, boundary) == Filling01(SHAPE_4322)


def test_edge_labels_empty_and_strips():
    from ascentbij.partition import is_horizontal_strip, is_vertical_strip

    for f in all_fillings(FerrersShape.triangle(3)):
        diagram, _ = forward_diagram(f)
        c = diagram.corners
        for (i, j), lam in c.items():
            if j == 0 or i == f.shape.height:
                assert lam == ()
            if (i, j + 1) in c:
                assert is_horizontal_strip(lam, c[(i, j + 1)])
            if (i + 1, j) in c:
                assert is_vertical_strip(c[(i + 1, j)], lam)


def test_chain_labels_exhaustive():
    assert helpers.chain_label_failures(5) == []


def test_boundary_step_counts():
    for n in range(1, 7):
        for t in all_triangular(n):
            assert helpers.boundary_step_failures(triangular_to_filling(t)) == []
    for f in all_fillings(SHAPE_4322):
        assert helpers.boundary_step_failures(f) == []


def test_forward_backward_inverse_on_all_triangle_fillings():
    for n in range(1, 6):
        shape = FerrersShape.triangle(n)
        seen = set()
        for f in all_fillings(shape):
            boundary = boundary_sequence(f)
            assert classify_boundary(boundary, n).t1
            assert backward_diagram(shape, boundary) == f
            seen.add(boundary)
        assert len(seen) == 2 ** (n * (n + 1) // 2)


@st.composite
def random_fillings(draw):
    rows = sorted(draw(st.lists(st.integers(1, 6), min_size=1, max_size=6)))
    shape = FerrersShape(rows)
    cells = list(shape.cells())
    ones = draw(st.lists(st.sampled_from(cells), unique=True, max_size=len(cells)))
    return Filling01(shape, ones)


@settings(max_examples=300, deadline=None)
@given(random_fillings())
def test_forward_backward_inverse_random_shapes(f):
    boundary = boundary_sequence(f)
    check_boundary(f.shape, boundary)
    assert backward_diagram(f.shape, boundary) == f
    assert helpers.boundary_step_failures(f) == []


def test_backward_rejects_bad_boundaries():
    shape = FerrersShape.triangle(2)
    with pytest.raises(InvalidObjectError):
        backward_diagram(shape, parse_partition_sequence("(∅,11,∅,∅,∅)"))
    with pytest.raises(InvalidObjectError):
        backward_diagram(shape, parse_partition_sequence("(∅,1,∅,∅)"))
    with pytest.raises(InvalidObjectError):
        backward_diagram(shape, parse_partition_sequence("(1,1,∅,∅,∅)"))


def test_classify_examples():
    lam = classify_boundary(NINE_ROW_BOUNDARY, 9)
    assert lam.t2 and lam.t5(2) and not lam.t3
    assert {"T1", "T2", "T5(2)"} <= lam.flags()
    v = classify_boundary(V12, 12)
    assert v.v and "V_12" in v.flags()
    empty = classify_boundary([()] * 7, 3)
    assert empty.t1 and empty.t3 and empty.v
    with pytest.raises(InvalidObjectError):
        classify_boundary([()] * 6, 3)


def test_one_per_row_boundaries_are_t2():
    for n in range(1, 6):
        for t in all_triangular(n):
            assert classify_boundary(boundary_sequence(triangular_to_filling(t)), n).t2


def test_v_sequences_are_exactly_the_v_class_and_count_avoiders():
    for n in range(1, 8):
        vs = list(enumerate_v_sequences(n))
        assert len(vs) == len(set(vs))
        assert all(classify_boundary(v, n).v for v in vs)
        assert len(vs) == sum(1 for _ in enumerate_ascent_sequences(n + 1, avoid=(2, 1, 0)))


def test_v_sequences_match_filter_on_small_n():
    from itertools import product

    from ascentbij.partition import partitions_up_to

    for n in range(1, 4):
        pool = [p for p in partitions_up_to(n) if len(p) == 0 or p[0] <= 2]
        brute = {
            (Partition(),) + mid + (Partition(),)
            for mid in product(pool, repeat=2 * n - 1)
            if classify_boundary((Partition(),) + mid + (Partition(),), n).v
        }
        assert set(enumerate_v_sequences(n)) == brute


def test_render_growth_shape():
    diagram, _ = forward_diagram(FILLING_4322)
    text = render_growth(diagram)
    assert "21" in text and "11" in text
    assert text.count("•") == 4


def test_random_larger_triangles_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(6, 12)
        shape = FerrersShape.triangle(n)
        ones = [c for c in shape.cells() if rng.random() < 0.3]
        f = Filling01(shape, ones)
        assert backward_diagram(shape, boundary_sequence(f)) == f

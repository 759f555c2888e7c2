"""Exhaustive checkers shared by the module tests and the acceptance suite.

Each returns a list of counterexamples; an empty list means the property held.
"""
from ascentbij.ascent import asc, enumerate_ascent_sequences
from ascentbij.bijection import PATTERN_210, ascent_to_partition, partition_to_ascent, phi, phi_inverse
from ascentbij.filling import (
    FerrersShape,
    all_triangular,
    boundary_corners,
    boundary_word,
    is_in_N_delta,
    longest_ne_chain,
    longest_se_chain,
    triangular_to_filling,
)
from ascentbij.growth import backward_cell, forward_cell, forward_diagram
from ascentbij.oracle import brute_force_ne_chain, brute_force_se_chain
from ascentbij.partition import (
    add_horizontal_strips,
    add_vertical_strips,
    conjugate,
    contains,
    differ_by_one_square,
    partitions_up_to,
)
from ascentbij.setpartition import enumerate_set_partitions, max_nesting


def local_quadruples(max_size):
    """Every (rho, mu, upsilon, m) meeting the forward preconditions, all sizes <= max_size."""
    for rho in partitions_up_to(max_size):
        room = max_size - rho.size
        ups_list = list(add_vertical_strips(rho, room))
        for mu in add_horizontal_strips(rho, room):
            for ups in ups_list:
                for m in (0, 1):
                    yield rho, mu, ups, m


def local_inversion_failures(max_size):
    bad = []
    count = 0
    for rho, mu, ups, m in local_quadruples(max_size):
        count += 1
        lam = forward_cell(rho, mu, ups, m)
        back = backward_cell(mu, ups, lam)
        if back != (rho, m) or forward_cell(back[0], mu, ups, back[1]) != lam:
            bad.append((rho, mu, ups, m, lam, back))
    return bad, count


def _adds_one(small, big):
    return contains(big, small) and big.size == small.size + 1


def single_square_failures(max_size):
    """The six implications about one-square changes in a single cell."""
    bad = []
    for rho, mu, ups, m in local_quadruples(max_size):
        lam = forward_cell(rho, mu, ups, m)
        checks = {
            "a": (m == 0 and rho == ups, lambda: lam == mu),
            "b": (m == 1 and rho == ups, lambda: _adds_one(mu, lam)),
            "c": (m == 0 and _adds_one(rho, ups), lambda: _adds_one(mu, lam)),
            "d": (m == 0 and rho == mu, lambda: lam == ups),
            "e": (m == 1 and rho == mu, lambda: _adds_one(ups, lam)),
            "f": (m == 0 and _adds_one(rho, mu), lambda: _adds_one(ups, lam)),
        }
        for name, (premise, conclusion) in checks.items():
            if premise and not conclusion():
                bad.append((name, rho, mu, ups, m, lam))
    return bad


def chain_label_failures(max_n):
    """Corner labels against DP chains and subset-search chains, every corner."""
    bad = []
    for n in range(1, max_n + 1):
        for t in all_triangular(n):
            f = triangular_to_filling(t)
            diagram, _ = forward_diagram(f)
            for c, lam in diagram.corners.items():
                first_row = lam[0] if lam else 0
                first_col = conjugate(lam)[0] if lam else 0
                ne_dp, se_dp = longest_ne_chain(f, c), longest_se_chain(f, c)
                ne_bf, se_bf = brute_force_ne_chain(f, c), brute_force_se_chain(f, c)
                if not first_row == ne_dp == ne_bf or not first_col == se_dp == se_bf:
                    bad.append((t.a, c, lam, ne_dp, ne_bf, se_dp, se_bf))
    return bad


def boundary_step_failures(f):
    """Each R step grows by the 1s in its column, each D step shrinks by the 1s in its row."""
    bad = []
    _, seq = forward_diagram(f)
    corners = boundary_corners(f.shape)
    for k, letter in enumerate(boundary_word(f.shape)):
        i, j = corners[k + 1]
        if letter == "R":
            ones = sum(1 for r, c in f.ones if c == j and r > i)
            ok = seq[k + 1].size - seq[k].size == ones and contains(seq[k + 1], seq[k])
        else:
            ones = sum(1 for r, c in f.ones if r == i and c <= j)
            ok = seq[k].size - seq[k + 1].size == ones and contains(seq[k], seq[k + 1])
        if ok and ones == 1:
            ok = differ_by_one_square(seq[k], seq[k + 1])
        if not ok:
            bad.append((k, letter, ones, seq[k], seq[k + 1]))
    return bad


def descent_order_failures(max_len):
    """For primitive 210-avoiders: i < j and a_i >= a_j force x_{i+1} > x_{j+1}."""
    bad = []
    for length in range(2, max_len + 1):
        for x in enumerate_ascent_sequences(length, avoid=PATTERN_210, primitive=True):
            a = phi(x).a
            for i in range(1, len(a) + 1):
                for j in range(i + 1, len(a) + 1):
                    if a[i - 1] >= a[j - 1] and not x[i] > x[j]:
                        bad.append((x, i, j))
    return bad


def value_formula_failures(max_n):
    """For a in N(Delta_n) and x = phi_inverse(a): x_{i+1} = asc(x_1..x_{i+1}) + a_i - i,
    and x_i > x_{i+1} exactly when a_{i-1} >= a_i."""
    bad = []
    for n in range(1, max_n + 1):
        for t in all_triangular(n):
            if not is_in_N_delta(t):
                continue
            a = t.a
            x = phi_inverse(t)
            for i in range(1, n + 1):
                if x[i] != asc(x[: i + 1]) + a[i - 1] - i:
                    bad.append((a, "value", i))
            for i in range(2, n + 1):
                if (x[i - 1] > x[i]) != (a[i - 2] >= a[i - 1]):
                    bad.append((a, "descent", i))
    return bad


def bijection_failures(n):
    """Injectivity, image, and pointwise inversion for sequences of length n."""
    bad = []
    targets = {p for p in enumerate_set_partitions(n) if max_nesting(p) < 3}
    seen = {}
    for x in enumerate_ascent_sequences(n, avoid=PATTERN_210):
        p = ascent_to_partition(x)
        if p in seen:
            bad.append(("collision", x, seen[p]))
        seen[p] = x
        if p not in targets:
            bad.append(("outside image", x, p))
        if partition_to_ascent(p) != x:
            bad.append(("no roundtrip", x, p))
    if set(seen) != targets:
        bad.append(("missed", sorted(map(str, targets - set(seen)))[:5]))
    return bad, len(seen), len(targets)


def triangle(n):
    return FerrersShape.triangle(n)

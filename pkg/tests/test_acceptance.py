"""Acceptance suite: the end-to-end checks this package must satisfy, one
pass/fail line per criterion (run with `pytest tests/test_acceptance.py -v -s`
to see the lines).

Two checks are expected to fail and are left failing on purpose:

* criterion 1, tau row: the pinned target values (..., 5, 10, 21, 42) do
  not satisfy the shape-count recurrence they are attributed to; the
  recurrence, the closed tree-shape census, and the generator census all
  agree on (..., 6, 11, 23, 46).  The computed values are kept.
* criterion 7, n = 5: the pinned target 247 disagrees with the exhaustive
  census 246, which three independent enumeration routes confirm.
"""

import math
import time
from itertools import permutations, product

import pytest

from helpers import all_perm_array, assoc_oracle, ci_internal_masks, perm_tuples
from semilat import (
    KaryOpTable,
    OpTable,
    all_binary_tree_semilattice_orders,
    all_semilattice_orders,
    binary_ci_count,
    brute_count_operations,
    count_ci_orders,
    count_internal_only,
    count_internal_orders,
    count_nondecreasing_orders,
    extend,
    fast_associativity_test,
    generate_nondecreasing_orders,
    internal_linear_filter_count,
    is_kary_associative,
    is_kary_preserving,
    is_nondecreasing_by_structure,
    is_nondecreasing_for,
    is_preserving,
    join_op,
    nondecreasing_order_count,
    reduce_to_binary,
    shape_count,
    symmetric_idempotent_monotone_tables,
    total_orders_ci,
    total_orders_internal,
    total_orders_nondecreasing,
    TotalOrder,
)


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


FIG1 = OpTable.from_rows([[1, 1, 2, 4], [1, 2, 3, 4], [2, 3, 3, 4], [4, 4, 4, 4]])


# ---------------------------------------------------------------------------
# criterion 1: sequence table for n = 0..8, exact, under one second

TABLE_TARGETS = {
    "alpha": (nondecreasing_order_count, [1, 1, 2, 5, 14, 42, 132, 429, 1430]),
    "tau": (shape_count, [1, 1, 1, 2, 3, 5, 10, 21, 42]),
    "beta": (internal_linear_filter_count, [1, 1, 2, 7, 32, 178, 1160, 8653, 72704]),
    "delta": (binary_ci_count, [1, 1, 2, 7, 30, 158, 984, 7129, 59026]),
}


@pytest.mark.parametrize("name", sorted(TABLE_TARGETS))
def test_criterion_1_sequence_rows(name):
    fn, target = TABLE_TARGETS[name]
    got = [fn(n) for n in range(9)]
    report(
        f"criterion 1: {name} row n = 0..8",
        got == target,
        f"got {got}, target {target}",
    )


def test_criterion_1_runtime():
    start = time.perf_counter()
    for fn, _ in TABLE_TARGETS.values():
        for n in range(9):
            fn(n)
    elapsed = time.perf_counter() - start
    report("criterion 1: table computed in under 1 s", elapsed < 1.0, f"{elapsed:.3f} s")


# ---------------------------------------------------------------------------
# criterion 2: Catalan closed form up to 30

def test_criterion_2_catalan_closed_form():
    ok = all(
        nondecreasing_order_count(n)
        == math.factorial(2 * n) // (math.factorial(n) * math.factorial(n + 1))
        for n in range(31)
    )
    report("criterion 2: alpha equals the Catalan closed form, n <= 30", ok)


# ---------------------------------------------------------------------------
# criterion 3: exhaustive operation count with runtime target

def test_criterion_3_operation_count_oracle():
    start = time.perf_counter()
    counts = []
    for n in range(6):
        count = 0
        for table in symmetric_idempotent_monotone_tables(n):
            if assoc_oracle(table):
                count += 1
        counts.append(count)
    elapsed = time.perf_counter() - start
    expected = [nondecreasing_order_count(n) for n in range(6)]
    report(
        "criterion 3: associative+idempotent+symmetric+monotone census is alpha, n <= 5",
        counts == expected and counts[5] == 42,
        f"got {counts} in {elapsed:.2f} s",
    )
    report("criterion 3: census finished within 2 min", elapsed < 120.0, f"{elapsed:.2f} s")


# ---------------------------------------------------------------------------
# criterion 4: fast associativity test soundness and completeness

def test_criterion_4_fast_test_matches_oracle():
    mismatches = 0
    total = 0
    for n in range(6):
        for table in symmetric_idempotent_monotone_tables(n):
            total += 1
            result = fast_associativity_test(table)
            if result.associative != assoc_oracle(table):
                mismatches += 1
            elif result.associative and join_op(result.order).values != table.values:
                mismatches += 1
    fig1 = fast_associativity_test(FIG1)
    report(
        "criterion 4: fast test agrees with the brute-force oracle, n <= 5",
        mismatches == 0,
        f"{total} tables",
    )
    report(
        "criterion 4: the four-element counterexample fails on block [1,3]",
        (not fig1.associative) and fig1.failed_interval == (1, 3),
    )


# ---------------------------------------------------------------------------
# criterion 5: theorem equivalences over all orders and chains, n <= 4

def test_criterion_5_theorem_equivalences():
    counterexamples = 0
    pairs = 0
    for n in range(5):
        chains = (
            [TotalOrder.from_bottom_to_top(p) for p in permutations(range(1, n + 1))]
            if n
            else [TotalOrder(())]
        )
        for order in all_semilattice_orders(n):
            table = join_op(order)
            for t in chains:
                pairs += 1
                monotone = is_preserving(table, t)
                nondecreasing = is_nondecreasing_for(order, t)
                structural = is_nondecreasing_by_structure(order, t)
                if not (monotone == nondecreasing == structural):
                    counterexamples += 1
    report(
        "criterion 5: monotone <=> nondecreasing <=> structural, n <= 4, all chains",
        counterexamples == 0,
        f"{pairs} order/chain pairs",
    )


# ---------------------------------------------------------------------------
# criterion 6: construction counts for every binary tree, n <= 6

def test_criterion_6_construction_counts():
    bad = 0
    checked = 0
    for n in range(7):
        perms = all_perm_array(n)
        for order in all_binary_tree_semilattice_orders(n):
            checked += 1
            ci_mask, internal_mask = ci_internal_masks(order, perms)
            nd_mask = ci_mask & internal_mask
            nd = {t.bottom_to_top() for t in total_orders_nondecreasing(order)}
            internal = {t.bottom_to_top() for t in total_orders_internal(order)}
            ci = {t.bottom_to_top() for t in total_orders_ci(order)}
            ok = (
                nd == perm_tuples(perms, nd_mask)
                and internal == perm_tuples(perms, internal_mask)
                and ci == perm_tuples(perms, ci_mask)
                and len(nd) == count_nondecreasing_orders(order)
                and len(internal) == count_internal_orders(order)
                and len(ci) == count_ci_orders(order)
            )
            if not ok:
                bad += 1
    report(
        "criterion 6: generator sets and counts match the permutation filter, n <= 6",
        bad == 0,
        f"{checked} binary-tree orders",
    )

    from semilat import SemilatticeOrder

    fig4 = SemilatticeOrder.from_pairs(5, [(2, 1), (3, 2), (4, 2), (5, 4)])
    listed = {
        (1, 3, 2, 4, 5), (1, 3, 2, 5, 4), (1, 4, 5, 2, 3), (1, 5, 4, 2, 3),
        (5, 4, 2, 3, 1), (4, 5, 2, 3, 1), (3, 2, 5, 4, 1), (3, 2, 4, 5, 1),
    }
    got = {t.bottom_to_top() for t in total_orders_nondecreasing(fig4)}
    report("criterion 6: the five-element example yields its eight listed chains", got == listed)


# ---------------------------------------------------------------------------
# criterion 7: internal-only census for n = 0..5

def test_criterion_7_internal_only_sequence():
    target = [1, 1, 2, 7, 36, 247]
    got = [count_internal_only(n) for n in range(6)]
    report(
        "criterion 7: internal-only census equals 1,1,2,7,36,247",
        got == target,
        f"got {got}",
    )


# ---------------------------------------------------------------------------
# criterion 8: k-ary round trip and ternary census

def test_criterion_8_kary_round_trip():
    bad = 0
    total = 0
    for n in range(1, 5):
        for order in generate_nondecreasing_orders(n):
            table = join_op(order)
            for k in (3, 4):
                total += 1
                if reduce_to_binary(extend(table, k)).values != table.values:
                    bad += 1
    report(
        "criterion 8: reduce(extend(J, k)) = J for nondecreasing joins, n <= 4, k in {3,4}",
        bad == 0,
        f"{total} round trips",
    )

    counts = []
    for n in range(1, 4):
        multisets = sorted(
            {tuple(sorted(c)) for c in product(range(1, n + 1), repeat=3)}
        )
        free = [m for m in multisets if len(set(m)) > 1]
        ranges = [range(m[0], m[-1] + 1) for m in free]
        count = 0
        for choice in product(*ranges):
            value = {m: v for m, v in zip(free, choice)}
            for x in range(1, n + 1):
                value[(x, x, x)] = x
            table = KaryOpTable.from_function(
                n, 3, lambda a, b, c: value[tuple(sorted((a, b, c)))]
            )
            if is_kary_preserving(table) and is_kary_associative(table):
                count += 1
        counts.append(count)
    expected = [nondecreasing_order_count(n) for n in range(1, 4)]
    report(
        "criterion 8: ternary associative census equals alpha, n <= 3",
        counts == expected,
        f"got {counts}",
    )


# ---------------------------------------------------------------------------
# criterion 9: the delta identity

def test_criterion_9_delta_identity():
    ok = True
    for n in range(2, 21):
        lhs = binary_ci_count(n + 1) + 2 * binary_ci_count(n)
        rhs = sum(
            (math.comb(n, i) + 1) * binary_ci_count(i) * binary_ci_count(n - i)
            for i in range(n + 1)
        )
        if lhs != rhs:
            ok = False
    report("criterion 9: delta(n+1) + 2 delta(n) identity, 2 <= n <= 20", ok)

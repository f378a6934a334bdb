"""Exact counting of chain-compatible semilattice orders, the recursive
generator of nondecreasing orders, and the exhaustive brute-force oracles
used to cross-validate the recurrences.

All sequence values are exact Python integers computed bottom-up from their
recurrences; no floating point is involved anywhere.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator

from .errors import BoundExceeded
from .hasse import TreeShape, all_tree_shapes, order_from_parent_map
from .orders import (
    PartialOrder,
    SemilatticeOrder,
    has_ci_property,
    has_linear_filter_property,
    is_internal_for,
    is_nondecreasing_for,
)
from .tables import OpTable, is_associative

GENERATION_BOUND_ENV = "SEMILAT_GEN_BOUND"
DEFAULT_GENERATION_BOUND = 10

TABLE_ENUMERATION_BOUND = 5
TREE_ENUMERATION_BOUND = 7
POSET_ENUMERATION_BOUND = 5


# ---------------------------------------------------------------------------
# counting sequences

@lru_cache(maxsize=None)
def _nondecreasing_counts(n: int) -> tuple[int, ...]:
    counts = [1]
    for m in range(1, n + 1):
        counts.append(sum(counts[m - i] * counts[i - 1] for i in range(1, m + 1)))
    return tuple(counts)


def nondecreasing_order_count(n: int) -> int:
    """Number of semilattice orders on {1..n} nondecreasing for the natural
    chain; the Catalan numbers."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _nondecreasing_counts(n)[n]


@lru_cache(maxsize=None)
def _shape_counts(n: int) -> tuple[int, ...]:
    counts = [1, 1]
    for m in range(2, n + 1):
        half = m // 2
        value = sum(counts[i] * counts[m - 1 - i] for i in range(half))
        if m % 2 == 1:
            value += counts[half] * (counts[half] + 1) // 2
        counts.append(value)
    return tuple(counts[: n + 1])


def shape_count(n: int) -> int:
    """Number of isomorphism types of nondecreasing semilattices on n
    elements; equals the number of unordered binary trees with n vertices
    (A001190 shifted by one)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _shape_counts(max(n, 1))[n]


@lru_cache(maxsize=None)
def _internal_linear_filter_counts(n: int) -> tuple[int, ...]:
    counts = [1, 1]
    for m in range(2, n + 1):
        value = m * counts[m - 1]
        value += sum(counts[i] * counts[m - i - 1] for i in range(1, m - 1))
        counts.append(value)
    return tuple(counts[: n + 1])


def internal_linear_filter_count(n: int) -> int:
    """Number of semilattice orders on {1..n} that are internal for the
    natural chain and have the linear filter property (A006014 for n >= 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _internal_linear_filter_counts(max(n, 1))[n]


@lru_cache(maxsize=None)
def _binary_ci_counts(n: int) -> tuple[int, ...]:
    from math import comb

    counts = [1, 1]
    for m in range(2, n + 1):
        value = sum(counts[i - 1] * counts[m - i] for i in range(1, m + 1))
        value += sum(
            comb(m - 1, j) * counts[j] * counts[m - j - 1] for j in range(1, m - 1)
        )
        counts.append(value)
    return tuple(counts[: n + 1])


def binary_ci_count(n: int) -> int:
    """Value of the recurrence d(n) = sum d(i-1) d(n-i) +
    sum C(n-1,j) d(j) d(n-j-1): 1, 1, 2, 7, 30, 158, 984, ...

    Stated as the count of binary-tree semilattice orders with the
    convex-ideal property, but the binomial factor admits non-contiguous
    child subtrees, which ideal convexity rules out; the exhaustive census
    (brute_count_operations with binary-tree and ci) gives 26, 106, 452 at
    n = 4, 5, 6.  This function computes the recurrence, not the census.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _binary_ci_counts(max(n, 1))[n]


SEQUENCES = {
    "alpha": nondecreasing_order_count,
    "tau": shape_count,
    "beta": internal_linear_filter_count,
    "delta": binary_ci_count,
}


# ---------------------------------------------------------------------------
# recursive generator of nondecreasing orders

def generation_bound() -> int:
    raw = os.environ.get(GENERATION_BOUND_ENV)
    if raw is None:
        return DEFAULT_GENERATION_BOUND
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_GENERATION_BOUND


def _interval_orders(lo: int, hi: int) -> Iterator[tuple[frozenset, dict]]:
    """Stream (strict pairs, join map) for every order on [lo, hi] that is
    nondecreasing for the natural chain, root labels ascending, left
    sub-stream outermost."""
    if lo > hi:
        yield frozenset(), {}
        return
    for r in range(lo, hi + 1):
        if r == lo or r == hi:
            rest = (lo + 1, hi) if r == lo else (lo, hi - 1)
            for strict, join in _interval_orders(*rest):
                new_strict = set(strict)
                new_join = dict(join)
                for x in range(lo, hi + 1):
                    if x != r:
                        new_strict.add((x, r))
                        new_join[(min(x, r), max(x, r))] = r
                yield frozenset(new_strict), new_join
        else:
            for left_strict, left_join in _interval_orders(lo, r - 1):
                for right_strict, right_join in _interval_orders(r + 1, hi):
                    new_strict = set(left_strict) | set(right_strict)
                    new_join = dict(left_join)
                    new_join.update(right_join)
                    for x in range(lo, r):
                        for y in range(r + 1, hi + 1):
                            new_join[(x, y)] = r
                    for x in range(lo, hi + 1):
                        if x != r:
                            new_strict.add((x, r))
                            new_join[(min(x, r), max(x, r))] = r
                    yield frozenset(new_strict), new_join


def _materialize(n: int, strict: frozenset, join: dict) -> SemilatticeOrder:
    leq = tuple(
        tuple(x == y or (x + 1, y + 1) in strict for y in range(n)) for x in range(n)
    )
    rows = tuple(
        tuple(
            x + 1 if x == y else join[(min(x, y) + 1, max(x, y) + 1)]
            for y in range(n)
        )
        for x in range(n)
    )
    return SemilatticeOrder(PartialOrder(n, leq), rows)


def generate_nondecreasing_orders(
    n: int, bound: int | None = None
) -> Iterator[SemilatticeOrder]:
    """Stream every semilattice order on {1..n} that is nondecreasing for
    the natural chain, each exactly once.

    Recursion on intervals: the top element is either an endpoint (stacked
    over the remaining interval) or an interior r splitting the interval in
    two.  Emission order is deterministic: ascending root label, then the
    left and right sub-streams nested in that order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = generation_bound() if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"n = {n} exceeds the generation bound {limit}")
    for strict, join in _interval_orders(1, n):
        yield _materialize(n, strict, join)


# ---------------------------------------------------------------------------
# exhaustive table enumeration (pruned)

def symmetric_idempotent_monotone_tables(n: int) -> Iterator[OpTable]:
    """Every symmetric idempotent monotone table on {1..n}, generated by
    filling the upper triangle row by row under the running monotonicity
    window (cell (x, y) is confined to [max(left, up, x), y])."""
    if n > TABLE_ENUMERATION_BOUND:
        raise BoundExceeded(f"table enumeration is capped at n = {TABLE_ENUMERATION_BOUND}")
    if n == 0:
        yield OpTable(0, ())
        return
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = i + 1
    cells = [(x, y) for x in range(n) for y in range(x + 1, n)]

    def fill(k: int) -> Iterator[OpTable]:
        if k == len(cells):
            yield OpTable(n, tuple(tuple(row) for row in grid))
            return
        x, y = cells[k]
        lb = grid[x][y - 1]
        if x > 0:
            lb = max(lb, grid[x - 1][y])
        for v in range(lb, y + 2):
            grid[x][y] = grid[y][x] = v
            yield from fill(k + 1)
        grid[x][y] = grid[y][x] = 0

    yield from fill(0)


def idempotent_monotone_tables(n: int) -> Iterator[OpTable]:
    """Every idempotent monotone table on {1..n} (symmetry not required)."""
    if n > 4:
        raise BoundExceeded("idempotent table enumeration is capped at n = 4")
    if n == 0:
        yield OpTable(0, ())
        return
    grid = [[0] * n for _ in range(n)]
    cells = [(x, y) for x in range(n) for y in range(n)]

    def fill(k: int) -> Iterator[OpTable]:
        if k == len(cells):
            yield OpTable(n, tuple(tuple(row) for row in grid))
            return
        x, y = cells[k]
        lb = min(x, y) + 1
        if x > 0:
            lb = max(lb, grid[x - 1][y])
        if y > 0:
            lb = max(lb, grid[x][y - 1])
        if x == y:
            if lb <= x + 1:
                grid[x][y] = x + 1
                yield from fill(k + 1)
                grid[x][y] = 0
            return
        for v in range(lb, max(x, y) + 2):
            grid[x][y] = v
            yield from fill(k + 1)
        grid[x][y] = 0

    yield from fill(0)


def monotone_tables(n: int) -> Iterator[OpTable]:
    """Every monotone table on {1..n} (no idempotency)."""
    if n > 4:
        raise BoundExceeded("monotone table enumeration is capped at n = 4")
    if n == 0:
        yield OpTable(0, ())
        return
    grid = [[0] * n for _ in range(n)]
    cells = [(x, y) for x in range(n) for y in range(n)]

    def fill(k: int) -> Iterator[OpTable]:
        if k == len(cells):
            yield OpTable(n, tuple(tuple(row) for row in grid))
            return
        x, y = cells[k]
        lb = 1
        if x > 0:
            lb = max(lb, grid[x - 1][y])
        if y > 0:
            lb = max(lb, grid[x][y - 1])
        for v in range(lb, n + 1):
            grid[x][y] = v
            yield from fill(k + 1)
        grid[x][y] = 0

    yield from fill(0)


# ---------------------------------------------------------------------------
# exhaustive order enumeration

@lru_cache(maxsize=None)
def all_semilattice_orders(n: int) -> tuple[SemilatticeOrder, ...]:
    """Every semilattice order on {1..n}, found by filtering all reflexive
    antisymmetric transitive relations for join existence.  Cached."""
    if n > POSET_ENUMERATION_BOUND:
        raise BoundExceeded(f"poset enumeration is capped at n = {POSET_ENUMERATION_BOUND}")
    if n == 0:
        return (SemilatticeOrder(PartialOrder(0, ()), ()),)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    orders = []
    full = (1 << n) - 1
    for states in product((0, 1, 2), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), s in zip(pairs, states):
            if s == 1:
                up[i] |= 1 << j
            elif s == 2:
                up[j] |= 1 << i
        ok = True
        for i in range(n):
            row = up[i]
            m = row & ~(1 << i)
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if up[j] & ~row:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                uppers = up[x] & up[y]
                if not uppers:
                    ok = False
                    break
                lub = None
                m = uppers
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if not (uppers & ~up[u]):
                        lub = u
                        break
                if lub is None:
                    ok = False
                    break
                join[x][y] = join[y][x] = lub + 1
            if not ok:
                break
        if not ok:
            continue
        leq = tuple(
            tuple(bool(up[x] & (1 << y)) for y in range(n)) for x in range(n)
        )
        orders.append(
            SemilatticeOrder(PartialOrder(n, leq), tuple(tuple(r) for r in join))
        )
    return tuple(orders)


@lru_cache(maxsize=None)
def all_binary_tree_semilattice_orders(n: int) -> tuple[SemilatticeOrder, ...]:
    """Every semilattice order on {1..n} whose Hasse diagram is a binary
    tree: all shapes, all labelings, deduplicated by parent map.  Cached."""
    if n > TREE_ENUMERATION_BOUND:
        raise BoundExceeded(f"tree enumeration is capped at n = {TREE_ENUMERATION_BOUND}")
    if n == 0:
        return (SemilatticeOrder(PartialOrder(0, ()), ()),)
    seen: set[tuple] = set()
    orders = []
    for shape in all_tree_shapes(n):
        slots: list[tuple] = []

        def walk(code, parent_slot):
            slot = len(slots)
            slots.append(parent_slot)
            for child in code:
                walk(child, slot)

        walk(shape.code, None)
        for perm in permutations(range(1, n + 1)):
            parent: list[int | None] = [None] * n
            for slot, parent_slot in enumerate(slots):
                if parent_slot is not None:
                    parent[perm[slot] - 1] = perm[parent_slot]
            key = tuple(parent)
            if key in seen:
                continue
            seen.add(key)
            orders.append(order_from_parent_map(n, key))
    return tuple(orders)


# ---------------------------------------------------------------------------
# brute-force counting

TABLE_PREDICATES = frozenset({"associative", "idempotent", "symmetric", "monotone"})
ORDER_PREDICATES = frozenset(
    {"binary-tree", "ci", "internal", "linear-filter", "nondecreasing"}
)


def brute_count_operations(n: int, predicates: Iterable[str]) -> int:
    """Count objects satisfying the given predicates by exhaustive search.

    Table predicates (any of associative, idempotent, symmetric, monotone)
    count operation tables; the enumeration base is already symmetric,
    idempotent, and monotone, so only associativity filters further.  Order
    predicates (binary-tree, ci, internal, linear-filter, nondecreasing)
    count labeled binary-tree semilattice orders.
    """
    preds = frozenset(predicates)
    if not preds:
        raise ValueError("no predicates given")
    if preds <= TABLE_PREDICATES:
        if n > TABLE_ENUMERATION_BOUND:
            raise BoundExceeded(
                f"table enumeration is capped at n = {TABLE_ENUMERATION_BOUND}"
            )
        count = 0
        need_assoc = "associative" in preds
        for table in symmetric_idempotent_monotone_tables(n):
            if not need_assoc or is_associative(table):
                count += 1
        return count
    if preds <= ORDER_PREDICATES:
        count = 0
        for order in all_binary_tree_semilattice_orders(n):
            if "ci" in preds and not has_ci_property(order):
                continue
            if "internal" in preds and not is_internal_for(order):
                continue
            if "linear-filter" in preds and not has_linear_filter_property(order):
                continue
            if "nondecreasing" in preds and not is_nondecreasing_for(order):
                continue
            count += 1
        return count
    unknown = preds - TABLE_PREDICATES - ORDER_PREDICATES
    raise ValueError(f"unknown or mixed predicates: {sorted(unknown) or sorted(preds)}")


def count_internal_only(n: int) -> int:
    """Count semilattice orders internal for the natural chain, with no
    other constraint; brute force over all semilattice orders."""
    if n > POSET_ENUMERATION_BOUND:
        raise BoundExceeded(
            f"internal-only counting is capped at n = {POSET_ENUMERATION_BOUND}"
        )
    return sum(1 for order in all_semilattice_orders(n) if is_internal_for(order))

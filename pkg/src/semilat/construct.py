"""Construct and count the total orders for which a binary-tree semilattice
order is nondecreasing, internal, or has the convex-ideal property.

Each generator recurses over the Hasse tree.  Children are visited in
ascending label order and every emission order is deterministic: splice
orientations come before ordinal-sum placements, insertion positions run
bottom-up.
"""

from __future__ import annotations

from typing import Iterator

from .hasse import RootedTree, rooted_tree
from .orders import SemilatticeOrder, TotalOrder


def _nondecreasing_chains(tree: RootedTree, v: int) -> Iterator[tuple[int, ...]]:
    kids = tree.children(v)
    if not kids:
        yield (v,)
    elif len(kids) == 1:
        for s in _nondecreasing_chains(tree, kids[0]):
            yield s + (v,)
            yield (v,) + s
    else:
        c1, c2 = kids
        for s1 in _nondecreasing_chains(tree, c1):
            for s2 in _nondecreasing_chains(tree, c2):
                yield s1 + (v,) + s2
                yield s2 + (v,) + s1


def _internal_chains(tree: RootedTree, v: int) -> Iterator[tuple[int, ...]]:
    kids = tree.children(v)
    if not kids:
        yield (v,)
    elif len(kids) == 1:
        for s in _internal_chains(tree, kids[0]):
            for pos in range(len(s) + 1):
                yield s[:pos] + (v,) + s[pos:]
    else:
        c1, c2 = kids
        for s1 in _internal_chains(tree, c1):
            for s2 in _internal_chains(tree, c2):
                yield s1 + (v,) + s2
                yield s2 + (v,) + s1


def _ci_chains(tree: RootedTree, v: int) -> Iterator[tuple[int, ...]]:
    kids = tree.children(v)
    if not kids:
        yield (v,)
    elif len(kids) == 1:
        for s in _ci_chains(tree, kids[0]):
            yield s + (v,)
            yield (v,) + s
    else:
        c1, c2 = kids
        for s1 in _ci_chains(tree, c1):
            for s2 in _ci_chains(tree, c2):
                yield s1 + (v,) + s2
                yield s2 + (v,) + s1
                yield (v,) + s1 + s2
                yield s1 + s2 + (v,)
                yield (v,) + s2 + s1
                yield s2 + s1 + (v,)


def _stream(order: SemilatticeOrder, chains) -> Iterator[TotalOrder]:
    tree = rooted_tree(order)
    if tree.root is None:
        yield TotalOrder(())
        return
    seen: set[tuple[int, ...]] = set()
    for chain in chains(tree, tree.root):
        if chain not in seen:
            seen.add(chain)
            yield TotalOrder.from_bottom_to_top(chain)


def total_orders_nondecreasing(order: SemilatticeOrder) -> Iterator[TotalOrder]:
    """Every chain for which the order is nondecreasing: the root is spliced
    between its sub-chains (either way round), or stacked at either end of a
    single sub-chain."""
    return _stream(order, _nondecreasing_chains)


def total_orders_internal(order: SemilatticeOrder) -> Iterator[TotalOrder]:
    """Every chain for which the order is internal; with one child the root
    may be inserted at any position."""
    return _stream(order, _internal_chains)


def total_orders_ci(order: SemilatticeOrder) -> Iterator[TotalOrder]:
    """Every chain for which the order has the convex-ideal property: the
    two splice orientations plus the root at top or bottom of each ordinal
    sum of the sub-chains."""
    return _stream(order, _ci_chains)


def count_nondecreasing_orders(order: SemilatticeOrder) -> int:
    """2^(n - L) where L is the number of minimal elements."""
    rooted_tree(order)
    return 2 ** (order.n - len(order.minimal_elements()))


def count_internal_orders(order: SemilatticeOrder) -> int:
    """Product over the tree of 2^(i-1) * m^(2-i) with i the child count and
    m the subtree size."""
    tree = rooted_tree(order)

    def gamma(v: int) -> int:
        kids = tree.children(v)
        if not kids:
            return 1
        m = len(tree.subtree(v))
        i = len(kids)
        value = 2 ** (i - 1) * m ** (2 - i)
        for c in kids:
            value *= gamma(c)
        return value

    return gamma(tree.root) if tree.root is not None else 1


def count_ci_orders(order: SemilatticeOrder) -> int:
    """Product over the tree of 3^(i-1) * 2 with i the child count."""
    tree = rooted_tree(order)

    def eta(v: int) -> int:
        kids = tree.children(v)
        if not kids:
            return 1
        value = 3 ** (len(kids) - 1) * 2
        for c in kids:
            value *= eta(c)
        return value

    return eta(tree.root) if tree.root is not None else 1

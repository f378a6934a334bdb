"""Hasse diagrams of semilattice orders: cover extraction, binary tree
recognition, structural labelings, smoothness, and DOT emission."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import NotBinaryTree, PreconditionViolated
from .orders import (
    PartialOrder,
    SemilatticeOrder,
    TotalOrder,
    join_op,
    principal_ideal,
)
from .tables import OpTable, is_preserving, neutral_element


def cover_pairs(order: SemilatticeOrder) -> tuple[tuple[int, int], ...]:
    """The cover relation as sorted (lower, upper) pairs: x is covered by y
    when x < y with nothing strictly between."""
    n, leq = order.n, order.base.leq
    pairs = []
    for x in range(n):
        for y in range(n):
            if x == y or not leq[x][y]:
                continue
            if any(z != x and z != y and leq[x][z] and leq[z][y] for z in range(n)):
                continue
            pairs.append((x + 1, y + 1))
    return tuple(sorted(pairs))


@dataclass(frozen=True)
class RootedTree:
    """An unordered rooted tree given by a parent map; children carry no
    order.  The empty tree has root None."""

    n: int
    parent: tuple[Optional[int], ...]
    root: Optional[int]

    def children(self, v: int) -> tuple[int, ...]:
        return tuple(x + 1 for x in range(self.n) if self.parent[x] == v)

    def subtree(self, v: int) -> tuple[int, ...]:
        out = [v]
        i = 0
        while i < len(out):
            out.extend(self.children(out[i]))
            i += 1
        return tuple(sorted(out))


def is_binary_tree_semilattice(order: SemilatticeOrder) -> bool:
    """True when the Hasse diagram is a tree rooted at the top element in
    which every vertex has at most two children."""
    n = order.n
    if n == 0:
        return True
    top = order.top
    up_counts = [0] * n
    down_counts = [0] * n
    for x, y in cover_pairs(order):
        up_counts[x - 1] += 1
        down_counts[y - 1] += 1
    for x in range(n):
        if x + 1 != top and up_counts[x] != 1:
            return False
        if down_counts[x] > 2:
            return False
    return up_counts[top - 1] == 0


def rooted_tree(order: SemilatticeOrder) -> RootedTree:
    """The Hasse diagram as a tree rooted at the top; fails fast when the
    cover graph is not a binary tree."""
    if not is_binary_tree_semilattice(order):
        raise NotBinaryTree("Hasse diagram is not a binary tree")
    if order.n == 0:
        return RootedTree(0, (), None)
    parent: list[Optional[int]] = [None] * order.n
    for x, y in cover_pairs(order):
        parent[x - 1] = y
    return RootedTree(order.n, tuple(parent), order.top)


def order_from_parent_map(n: int, parent: tuple[Optional[int], ...]) -> SemilatticeOrder:
    """The semilattice order whose Hasse diagram is the given rooted tree
    (x below y iff y is an ancestor of x)."""
    ancestors: list[set[int]] = []
    for x in range(1, n + 1):
        seen = {x}
        v = parent[x - 1]
        while v is not None:
            seen.add(v)
            v = parent[v - 1]
        ancestors.append(seen)
    leq = tuple(
        tuple(y + 1 in ancestors[x] for y in range(n)) for x in range(n)
    )
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            if y + 1 in ancestors[x]:
                lca = y + 1
            elif x + 1 in ancestors[y]:
                lca = x + 1
            else:
                lca = y + 1
                while lca not in ancestors[x]:
                    lca = parent[lca - 1]
            join[x][y] = join[y][x] = lca
    return SemilatticeOrder(PartialOrder(n, leq), tuple(tuple(row) for row in join))


# ---------------------------------------------------------------------------
# shapes

@dataclass(frozen=True)
class TreeShape:
    """An unlabeled binary tree up to isomorphism.

    The canonical code is a nested tuple: a vertex is the sorted tuple of
    its child codes, a leaf is ().  The empty tree has code None.
    """

    code: Optional[tuple]

    @property
    def size(self) -> int:
        if self.code is None:
            return 0

        def count(c):
            return 1 + sum(count(ch) for ch in c)

        return count(self.code)

    @classmethod
    def of_tree(cls, tree: RootedTree) -> "TreeShape":
        if tree.root is None:
            return cls(None)

        def encode(v: int):
            return tuple(sorted(encode(c) for c in tree.children(v)))

        return cls(encode(tree.root))

    @classmethod
    def of_order(cls, order: SemilatticeOrder) -> "TreeShape":
        return cls.of_tree(rooted_tree(order))


@lru_cache(maxsize=None)
def all_tree_shapes(n: int) -> tuple[TreeShape, ...]:
    """Every binary tree shape with n vertices, canonically encoded."""
    if n <= 0:
        return ()
    if n == 1:
        return (TreeShape(()),)
    codes = []
    for child in all_tree_shapes(n - 1):
        codes.append((child.code,))
    for i in range(1, (n - 1) // 2 + 1):
        j = n - 1 - i
        if i < j:
            for a in all_tree_shapes(i):
                for b in all_tree_shapes(j):
                    codes.append(tuple(sorted((a.code, b.code))))
        else:
            halves = all_tree_shapes(i)
            for ai in range(len(halves)):
                for bi in range(ai, len(halves)):
                    codes.append(
                        tuple(sorted((halves[ai].code, halves[bi].code)))
                    )
    return tuple(TreeShape(c) for c in sorted(set(codes)))


def canonical_nondecreasing_labeling(shape: TreeShape) -> SemilatticeOrder:
    """Label a binary tree shape with 1..n so the resulting order is
    nondecreasing for the natural chain.

    One child: the root takes the interval maximum.  Two children: the root
    takes |C1|+1 positions up from the interval bottom, the components take
    the labels below and above it.
    """
    if shape.code is None:
        return order_from_parent_map(0, ())
    n = shape.size
    parent: list[Optional[int]] = [None] * n

    def size_of(code) -> int:
        return 1 + sum(size_of(c) for c in code)

    def place(code, lo: int, hi: int) -> int:
        if not code:
            return lo
        if len(code) == 1:
            root = hi
            child = place(code[0], lo, hi - 1)
        else:
            s1 = size_of(code[0])
            root = lo + s1
            c1 = place(code[0], lo, lo + s1 - 1)
            c2 = place(code[1], lo + s1 + 1, hi)
            parent[c1 - 1] = root
            parent[c2 - 1] = root
            return root
        parent[child - 1] = root
        return root

    place(shape.code, 1, n)
    return order_from_parent_map(n, tuple(parent))


# ---------------------------------------------------------------------------
# structural characterization

def satisfies_structure_condition(
    order: SemilatticeOrder, t: Optional[TotalOrder] = None
) -> bool:
    """For every Hasse edge from child x' to x: x is the chain-minimum of the
    elements strictly above all of the ideal of x', or the chain-maximum of
    the elements strictly below all of it."""
    tree = rooted_tree(order)
    n = order.n
    if t is None:
        t = TotalOrder.natural(n)
    for child in range(1, n + 1):
        x = tree.parent[child - 1]
        if x is None:
            continue
        ideal = principal_ideal(order, child)
        above = [z for z in range(1, n + 1) if all(t.lt(y, z) for y in ideal)]
        below = [z for z in range(1, n + 1) if all(t.lt(z, y) for y in ideal)]
        if above and t.min_of(above) == x:
            continue
        if below and t.max_of(below) == x:
            continue
        return False
    return True


def is_nondecreasing_by_structure(
    order: SemilatticeOrder, t: Optional[TotalOrder] = None
) -> bool:
    """Structural route to nondecreasingness: binary tree Hasse diagram plus
    the per-edge min/max condition.  Agrees with is_nondecreasing_for."""
    if not is_binary_tree_semilattice(order):
        return False
    return satisfies_structure_condition(order, t)


def has_neutral_element(order: SemilatticeOrder, t: Optional[TotalOrder] = None) -> bool:
    """Whether the join operation has a neutral element.  Requires the join
    to be monotone for t; under that hypothesis the answer is equivalent to
    the order being a single-peaked chain."""
    table = join_op(order)
    if not is_preserving(table, t):
        raise PreconditionViolated("join operation is not monotone for the chain")
    return neutral_element(table) is not None


# ---------------------------------------------------------------------------
# smoothness

def is_smooth(table: OpTable) -> bool:
    """Unit-step condition in each argument for the natural chain."""
    n, v = table.n, table.values
    for x in range(n):
        for y in range(n):
            if x + 1 < n and not v[x][y] <= v[x + 1][y] <= v[x][y] + 1:
                return False
            if y + 1 < n and not v[x][y] <= v[x][y + 1] <= v[x][y] + 1:
                return False
    return True


def smooth_peak(order: SemilatticeOrder) -> Optional[int]:
    """The peak a when the order consists of the chain 1 < 2 < ... < a
    together with the chain n < n-1 < ... < a glued at the top a; None
    otherwise.

    The degenerate peaks a = n (the natural chain) and a = 1 (the reversed
    chain) are accepted: a peak exists exactly when the join operation is
    smooth.
    """
    n = order.n
    if n == 0:
        return None
    leq = order.base.leq
    for a in range(1, n + 1):
        ok = True
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                expected = (x <= a and y <= a and x <= y) or (
                    x >= a and y >= a and x >= y
                )
                if leq[x - 1][y - 1] != expected:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return a
    return None


# ---------------------------------------------------------------------------
# DOT emission

def dot_hasse(order: SemilatticeOrder, name: str = "hasse") -> str:
    """Graphviz source for the Hasse diagram, vertices listed 1..n and edges
    pointing from lower to upper element."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in range(1, order.n + 1):
        lines.append(f"  {x};")
    for x, y in cover_pairs(order):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"

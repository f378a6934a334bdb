"""Partial orders and semilattice orders on {1..n}, the order/operation
correspondence, and the chain-relative predicates (convex-ideal property,
internality, nondecreasingness, linear filters, single-peakedness)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import NotPartialOrder, NotSemilattice, ParseError
from .tables import OpTable, is_associative, is_idempotent, is_symmetric


@dataclass(frozen=True)
class TotalOrder:
    """A total order (chain) on {1..n}: rank[x-1] is the position of x,
    counted from 1 at the bottom."""

    rank: tuple[int, ...]

    def __post_init__(self):
        n = len(self.rank)
        if sorted(self.rank) != list(range(1, n + 1)):
            raise ValueError("rank must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.rank)

    @classmethod
    def natural(cls, n: int) -> "TotalOrder":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_bottom_to_top(cls, elements: Iterable[int]) -> "TotalOrder":
        elems = tuple(elements)
        if sorted(elems) != list(range(1, len(elems) + 1)):
            raise ValueError("elements must list each of 1..n exactly once")
        rank = [0] * len(elems)
        for pos, x in enumerate(elems, start=1):
            rank[x - 1] = pos
        return cls(tuple(rank))

    def position(self, x: int) -> int:
        return self.rank[x - 1]

    def le(self, x: int, y: int) -> bool:
        return self.rank[x - 1] <= self.rank[y - 1]

    def lt(self, x: int, y: int) -> bool:
        return self.rank[x - 1] < self.rank[y - 1]

    def bottom_to_top(self) -> tuple[int, ...]:
        return tuple(sorted(range(1, self.n + 1), key=lambda x: self.rank[x - 1]))

    def reverse(self) -> "TotalOrder":
        n = self.n
        return TotalOrder(tuple(n + 1 - r for r in self.rank))

    def max_of(self, xs: Iterable[int]) -> int:
        return max(xs, key=lambda x: self.rank[x - 1])

    def min_of(self, xs: Iterable[int]) -> int:
        return min(xs, key=lambda x: self.rank[x - 1])


@dataclass(frozen=True)
class PartialOrder:
    """A reflexive, antisymmetric, transitive relation on {1..n} as a dense
    boolean matrix: leq[x-1][y-1] means x is below y."""

    n: int
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n, leq = self.n, self.leq
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("relation matrix must be n x n")
        for x in range(n):
            if not leq[x][x]:
                raise NotPartialOrder(f"relation not reflexive at {x + 1}")
        for x in range(n):
            for y in range(n):
                if x != y and leq[x][y] and leq[y][x]:
                    raise NotPartialOrder(f"antisymmetry fails on {x + 1}, {y + 1}")
        for x in range(n):
            row = leq[x]
            for y in range(n):
                if row[y]:
                    ry = leq[y]
                    for z in range(n):
                        if ry[z] and not row[z]:
                            raise NotPartialOrder(
                                f"transitivity fails on {x + 1}, {y + 1}, {z + 1}"
                            )

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PartialOrder":
        """Build from relation pairs (x below y); the reflexive-transitive
        closure is applied before validation."""
        leq = [[x == y for y in range(n)] for x in range(n)]
        for x, y in pairs:
            if not (1 <= x <= n and 1 <= y <= n):
                raise ValueError(f"pair ({x}, {y}) outside 1..{n}")
            leq[x - 1][y - 1] = True
        for k in range(n):
            for x in range(n):
                if leq[x][k]:
                    row, rk = leq[x], leq[k]
                    for y in range(n):
                        if rk[y]:
                            row[y] = True
        return cls(n, tuple(tuple(row) for row in leq))

    def le(self, x: int, y: int) -> bool:
        return self.leq[x - 1][y - 1]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x - 1][y - 1]

    def incomparable(self, x: int, y: int) -> bool:
        return not self.leq[x - 1][y - 1] and not self.leq[y - 1][x - 1]


@dataclass(frozen=True)
class SemilatticeOrder:
    """A partial order in which every pair has a least upper bound, stored
    together with its join table.

    Build instances through :meth:`from_partial_order`, :meth:`from_pairs`,
    or :func:`order_from_op`; the plain constructor assumes the relation and
    the join table are already consistent.
    """

    base: PartialOrder
    join: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.base.n

    @classmethod
    def from_partial_order(cls, base: PartialOrder) -> "SemilatticeOrder":
        n, leq = base.n, base.leq
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                uppers = [z for z in range(n) if leq[x][z] and leq[y][z]]
                if not uppers:
                    raise NotSemilattice(f"{x + 1} and {y + 1} have no upper bound")
                lub = None
                for u in uppers:
                    if all(leq[u][v] for v in uppers):
                        lub = u
                        break
                if lub is None:
                    raise NotSemilattice(
                        f"{x + 1} and {y + 1} have no least upper bound"
                    )
                join[x][y] = join[y][x] = lub + 1
        return cls(base, tuple(tuple(row) for row in join))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "SemilatticeOrder":
        return cls.from_partial_order(PartialOrder.from_pairs(n, pairs))

    def le(self, x: int, y: int) -> bool:
        return self.base.leq[x - 1][y - 1]

    def lt(self, x: int, y: int) -> bool:
        return self.base.lt(x, y)

    def incomparable(self, x: int, y: int) -> bool:
        return self.base.incomparable(x, y)

    def join_of(self, x: int, y: int) -> int:
        return self.join[x - 1][y - 1]

    @property
    def top(self) -> Optional[int]:
        """The greatest element (None only when n = 0)."""
        if self.n == 0:
            return None
        leq = self.base.leq
        for x in range(self.n):
            if all(leq[y][x] for y in range(self.n)):
                return x + 1
        raise NotSemilattice("no top element")

    def minimal_elements(self) -> tuple[int, ...]:
        leq = self.base.leq
        return tuple(
            x + 1
            for x in range(self.n)
            if not any(y != x and leq[y][x] for y in range(self.n))
        )

    def is_total(self) -> bool:
        leq = self.base.leq
        return all(
            leq[x][y] or leq[y][x] for x in range(self.n) for y in range(x + 1, self.n)
        )

    def as_total_order(self) -> Optional[TotalOrder]:
        """The chain this order is, when it is total; otherwise None."""
        if not self.is_total():
            return None
        leq = self.base.leq
        rank = tuple(sum(1 for y in range(self.n) if leq[y][x]) for x in range(self.n))
        return TotalOrder(rank)


def order_from_op(table: OpTable) -> SemilatticeOrder:
    """The semilattice order associated with an associative, symmetric,
    idempotent table: x below y iff F(x,y) = y.  The join table is the
    input itself."""
    if not is_idempotent(table):
        raise NotSemilattice("table is not idempotent")
    if not is_symmetric(table):
        raise NotSemilattice("table is not symmetric")
    if not is_associative(table):
        raise NotSemilattice("table is not associative")
    n, v = table.n, table.values
    leq = tuple(tuple(v[x][y] == y + 1 for y in range(n)) for x in range(n))
    return SemilatticeOrder(PartialOrder(n, leq), v)


def join_op(order: SemilatticeOrder) -> OpTable:
    """The join table of a semilattice order; round-trips with order_from_op."""
    return OpTable(order.n, order.join)


def principal_ideal(order: SemilatticeOrder, x: int) -> frozenset[int]:
    """Every element below x (inclusive)."""
    leq = order.base.leq
    return frozenset(y + 1 for y in range(order.n) if leq[y][x - 1])


def _chain(order_n: int, t: Optional[TotalOrder]) -> tuple[int, ...]:
    if t is None:
        return tuple(range(1, order_n + 1))
    if t.n != order_n:
        raise ValueError(f"total order on {t.n} elements, order on {order_n}")
    return t.bottom_to_top()


def has_ci_property(order: SemilatticeOrder, t: Optional[TotalOrder] = None) -> bool:
    """Convex-ideal property for the chain t: whenever a < b < c along t,
    b lies below the join of a and c."""
    chain = _chain(order.n, t)
    n = order.n
    leq, join = order.base.leq, order.join
    for i in range(n):
        a = chain[i]
        for k in range(i + 2, n):
            c = chain[k]
            jac = join[a - 1][c - 1]
            for j in range(i + 1, k):
                if not leq[chain[j] - 1][jac - 1]:
                    return False
    return True


def is_internal_for(order: SemilatticeOrder, t: Optional[TotalOrder] = None) -> bool:
    """Internality for the chain t: no a < b < c along t has the join of
    b, c equal to a, or the join of a, b equal to c."""
    chain = _chain(order.n, t)
    n = order.n
    join = order.join
    for i in range(n):
        a = chain[i]
        for j in range(i + 1, n):
            b = chain[j]
            jab = join[a - 1][b - 1]
            for k in range(j + 1, n):
                c = chain[k]
                if join[b - 1][c - 1] == a or jab == c:
                    return False
    return True


def is_nondecreasing_for(order: SemilatticeOrder, t: Optional[TotalOrder] = None) -> bool:
    """Convex-ideal property plus internality: exactly the orders whose join
    operation is monotone for t."""
    return has_ci_property(order, t) and is_internal_for(order, t)


def has_linear_filter_property(order: SemilatticeOrder) -> bool:
    """True when no incomparable pair has a common lower bound, equivalently
    when every filter is a chain."""
    n, leq = order.n, order.base.leq
    for x in range(n):
        for y in range(x + 1, n):
            if leq[x][y] or leq[y][x]:
                continue
            for z in range(n):
                if leq[z][x] and leq[z][y]:
                    return False
    return True


def is_single_peaked(p: TotalOrder, t: Optional[TotalOrder] = None) -> bool:
    """Single-peakedness of the chain p relative to the chain t: whenever
    a < b < c along t, b sits below the p-larger of a and c."""
    n = p.n
    chain = _chain(n, t)
    rank = p.rank
    for i in range(n):
        ra = rank[chain[i] - 1]
        for k in range(i + 2, n):
            bound = max(ra, rank[chain[k] - 1])
            for j in range(i + 1, k):
                if rank[chain[j] - 1] > bound:
                    return False
    return True


# ---------------------------------------------------------------------------
# file formats

def format_order(order: SemilatticeOrder) -> str:
    """Text form: first line n, then one 'x y' line per strict relation pair
    of the transitive reduction (cover pairs)."""
    from .hasse import cover_pairs

    lines = [str(order.n)]
    lines.extend(f"{x} {y}" for x, y in cover_pairs(order))
    return "\n".join(lines) + "\n"


def parse_order(text: str) -> SemilatticeOrder:
    """Parse the order format: first line n, then 'x y' pairs meaning x is
    below y.  The transitive closure is applied, then the order and
    semilattice invariants are checked."""
    n = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected a single integer n on the first line", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"invalid size {fields[0]!r}", lineno) from None
            if n < 0:
                raise ParseError("n must be nonnegative", lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected a pair 'x y', got {line!r}", lineno)
        try:
            x, y = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer pair {line!r}", lineno) from None
        if not (1 <= x <= n and 1 <= y <= n):
            raise ParseError(f"pair ({x}, {y}) outside 1..{n}", lineno)
        pairs.append((x, y))
    if n is None:
        raise ParseError("empty order file")
    return SemilatticeOrder.from_pairs(n, pairs)


def order_to_json(order: SemilatticeOrder) -> str:
    from .hasse import cover_pairs

    return json.dumps({"n": order.n, "pairs": [list(p) for p in cover_pairs(order)]})


def order_from_json(text: str) -> SemilatticeOrder:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "pairs" not in doc:
        raise ParseError('JSON order needs keys "n" and "pairs"')
    try:
        return SemilatticeOrder.from_pairs(
            doc["n"], [(int(x), int(y)) for x, y in doc["pairs"]]
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def load_order(path) -> SemilatticeOrder:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return order_from_json(text)
    return parse_order(text)


def format_total_order(t: TotalOrder) -> str:
    """One line, the permutation bottom-to-top."""
    return " ".join(str(x) for x in t.bottom_to_top()) + "\n"


def parse_total_order(text: str) -> TotalOrder:
    fields = text.split()
    try:
        elems = [int(f) for f in fields]
    except ValueError:
        raise ParseError("non-integer entry in total order") from None
    try:
        return TotalOrder.from_bottom_to_top(elems)
    except (ValueError, IndexError):
        raise ParseError("total order must list each of 1..n exactly once") from None

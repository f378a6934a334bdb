"""Fast recursive associativity test for idempotent, symmetric, monotone
tables, degree-based zero detection, and level-set (contour) extraction.

The test peels off the zero element of each sub-block: an idempotent
symmetric monotone table is associative exactly when every block reached by
the recursion has a zero.  Each zero becomes the top of the recovered
semilattice order, so a successful run returns the order whose join is the
input table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionViolated
from .orders import PartialOrder, SemilatticeOrder
from .tables import (
    OpTable,
    degree_sequence,
    is_idempotent,
    is_preserving,
    is_symmetric,
    zero_element,
)


@dataclass(frozen=True)
class FastTestResult:
    """Outcome of the recursive test: on success the recovered order whose
    join equals the input, on failure the block [lo, hi] with no zero."""

    associative: bool
    order: Optional[SemilatticeOrder]
    failed_interval: Optional[tuple[int, int]]


def _require_idempotent_monotone(table: OpTable) -> None:
    if not is_idempotent(table):
        raise PreconditionViolated("table is not idempotent")
    if not is_preserving(table):
        raise PreconditionViolated("table is not monotone for the natural chain")


def find_zero_by_degree(table: OpTable) -> Optional[int]:
    """Locate the zero of an idempotent monotone table from its degree
    sequence alone: a is the zero iff deg(a) = 2a(n-a+1) - 1."""
    _require_idempotent_monotone(table)
    n = table.n
    counts = degree_sequence(table).counts
    found = None
    for a in range(1, n + 1):
        if counts[a - 1] == 2 * a * (n - a + 1) - 1:
            found = a
            break
    if __debug__:
        assert found == zero_element(table), "degree formula disagrees with scan"
    return found


def _block_zero(values, lo: int, hi: int) -> Optional[int]:
    """Zero of the sub-block [lo, hi] via the degree formula, degrees being
    recomputed on the block (cells stay inside the block for idempotent
    monotone tables)."""
    m = hi - lo + 1
    counts = [0] * m
    for x in range(lo - 1, hi):
        row = values[x]
        for y in range(lo - 1, hi):
            counts[row[y] - lo] += 1
    for p in range(1, m + 1):
        if counts[p - 1] == 2 * p * (m - p + 1) - 1:
            return lo + p - 1
    return None


def _scan_block_zero(values, lo: int, hi: int) -> Optional[int]:
    for a in range(lo, hi + 1):
        row = values[a - 1]
        if all(
            row[y] == a and values[y][a - 1] == a for y in range(lo - 1, hi)
        ):
            return a
    return None


def fast_associativity_test(table: OpTable) -> FastTestResult:
    """Decide associativity of an idempotent, symmetric, monotone table
    without checking triples.

    Recursion on blocks [lo, hi]: find the zero r of the block (no zero
    means not associative, reported with the failing block); when r is an
    endpoint recurse on the rest, otherwise split at r.  Each r is stacked
    above its sub-orders, so success also yields the associated order.
    """
    _require_idempotent_monotone(table)
    if not is_symmetric(table):
        raise PreconditionViolated("table is not symmetric")
    n = table.n
    values = table.values
    strict: set[tuple[int, int]] = set()
    join: dict[tuple[int, int], int] = {}

    def stack(r: int, lo: int, hi: int) -> None:
        for x in range(lo, hi + 1):
            if x != r:
                strict.add((x, r))
                join[(min(x, r), max(x, r))] = r

    def solve(lo: int, hi: int) -> Optional[tuple[int, int]]:
        if lo > hi:
            return None
        r = _block_zero(values, lo, hi)
        if __debug__:
            assert r == _scan_block_zero(values, lo, hi)
        if r is None:
            return (lo, hi)
        if r == lo:
            failure = solve(lo + 1, hi)
        elif r == hi:
            failure = solve(lo, hi - 1)
        else:
            failure = solve(lo, r - 1)
            if failure is None:
                failure = solve(r + 1, hi)
            if failure is None:
                for x in range(lo, r):
                    for y in range(r + 1, hi + 1):
                        join[(x, y)] = r
        if failure is not None:
            return failure
        stack(r, lo, hi)
        return None

    failure = solve(1, n)
    if failure is not None:
        return FastTestResult(False, None, failure)
    leq = tuple(
        tuple(x == y or (x + 1, y + 1) in strict for y in range(n)) for x in range(n)
    )
    join_rows = tuple(
        tuple(
            x + 1 if x == y else join[(min(x, y) + 1, max(x, y) + 1)]
            for y in range(n)
        )
        for x in range(n)
    )
    order = SemilatticeOrder(PartialOrder(n, leq), join_rows)
    return FastTestResult(True, order, None)


# ---------------------------------------------------------------------------
# contour plots

@dataclass(frozen=True)
class ContourPlot:
    """Level sets of a table over the n x n cell grid: every maximal set of
    cells sharing a value is one connected component of the contour plot."""

    n: int
    levels: tuple[tuple[int, frozenset[tuple[int, int]]], ...]

    @property
    def component_count(self) -> int:
        return len(self.levels)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(cells) for _, cells in self.levels)


def contour_plot(table: OpTable) -> ContourPlot:
    """Group the table cells by value.  Meaningful as a contour plot for
    idempotent tables, where every value 1..n is attained."""
    cells: dict[int, set[tuple[int, int]]] = {}
    for x in range(1, table.n + 1):
        for y in range(1, table.n + 1):
            cells.setdefault(table(x, y), set()).add((x, y))
    levels = tuple(
        (value, frozenset(cells[value])) for value in sorted(cells)
    )
    return ContourPlot(table.n, levels)


def ascii_contour(table: OpTable) -> str:
    """n x n grid of values (y growing upward) plus the component count."""
    n = table.n
    plot = contour_plot(table)
    width = max(1, len(str(n)))
    lines = []
    for y in range(n, 0, -1):
        row = " ".join(f"{table(x, y):>{width}}" for x in range(1, n + 1))
        lines.append(f"{y:>{width}} | {row}")
    lines.append(f"{'':>{width}} +-{'-' * ((width + 1) * n - 1)}")
    lines.append(f"{'':>{width}}   " + " ".join(f"{x:>{width}}" for x in range(1, n + 1)))
    lines.append(f"components: {plot.component_count}")
    return "\n".join(lines) + "\n"

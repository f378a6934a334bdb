"""Operation tables on {1..n} and their elementary property predicates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable, Optional

from .errors import ParseError

if TYPE_CHECKING:
    from .orders import TotalOrder


@dataclass(frozen=True)
class OpTable:
    """A binary operation on {1..n} stored as a dense n x n value table.

    ``values[x-1][y-1]`` is the result at (x, y).  Elements are always the
    integers 1..n; n = 0 is allowed and carries an empty table.  Instances
    are immutable and safe to share between threads.
    """

    n: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ground set size must be nonnegative")
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.values)}")
        for row in self.values:
            if len(row) != self.n:
                raise ValueError(f"expected {self.n} entries per row")
            for v in row:
                if not 1 <= v <= self.n:
                    raise ValueError(f"entry {v} outside 1..{self.n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "OpTable":
        values = tuple(tuple(row) for row in rows)
        return cls(len(values), values)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], int]) -> "OpTable":
        rng = range(1, n + 1)
        return cls(n, tuple(tuple(fn(x, y) for y in rng) for x in rng))

    def __call__(self, x: int, y: int) -> int:
        return self.values[x - 1][y - 1]

    def restrict(self, lo: int, hi: int) -> "OpTable":
        """Cell-wise restriction to [lo, hi], relabelled to 1..(hi-lo+1).

        Only meaningful when the block is closed under the operation, which
        holds for every sub-interval of an idempotent monotone table.
        """
        return OpTable(
            hi - lo + 1,
            tuple(
                tuple(self.values[x][y] - lo + 1 for y in range(lo - 1, hi))
                for x in range(lo - 1, hi)
            ),
        )


@dataclass(frozen=True)
class DegreeSequence:
    """Per-value preimage sizes of a table: counts[z-1] = |F^-1(z)|."""

    counts: tuple[int, ...]

    def of(self, z: int) -> int:
        return self.counts[z - 1]


def is_associative(table: OpTable) -> bool:
    """True when (x*y)*z = x*(y*z) for all triples (brute-force oracle)."""
    v = table.values
    for x in range(table.n):
        vx = v[x]
        for y in range(table.n):
            vxy = v[vx[y] - 1]
            vy = v[y]
            for z in range(table.n):
                if vxy[z] != vx[vy[z] - 1]:
                    return False
    return True


def is_symmetric(table: OpTable) -> bool:
    v = table.values
    for x in range(table.n):
        for y in range(x + 1, table.n):
            if v[x][y] != v[y][x]:
                return False
    return True


def is_idempotent(table: OpTable) -> bool:
    return all(table.values[x][x] == x + 1 for x in range(table.n))


def is_quasitrivial(table: OpTable) -> bool:
    """True when every cell equals one of its two coordinates."""
    v = table.values
    for x in range(table.n):
        for y in range(table.n):
            if v[x][y] not in (x + 1, y + 1):
                return False
    return True


def _rank_vector(t: Optional["TotalOrder"], n: int) -> tuple[int, ...]:
    if t is None:
        return tuple(range(1, n + 1))
    if len(t.rank) != n:
        raise ValueError(f"total order on {len(t.rank)} elements, table on {n}")
    return t.rank


def _bottom_to_top(t: Optional["TotalOrder"], n: int) -> tuple[int, ...]:
    rank = _rank_vector(t, n)
    return tuple(sorted(range(1, n + 1), key=lambda x: rank[x - 1]))


def is_preserving(table: OpTable, t: Optional["TotalOrder"] = None) -> bool:
    """True when the table is monotone in each argument for the chain t.

    t defaults to the natural order 1 < 2 < ... < n.  Monotonicity is
    checked along consecutive chain steps, which suffices.
    """
    n = table.n
    rank = _rank_vector(t, n)
    chain = _bottom_to_top(t, n)
    v = table.values
    for i in range(n - 1):
        a, b = chain[i] - 1, chain[i + 1] - 1
        ra, rb = v[a], v[b]
        for y in range(n):
            if rank[ra[y] - 1] > rank[rb[y] - 1]:
                return False
            if rank[v[y][a] - 1] > rank[v[y][b] - 1]:
                return False
    return True


def is_internal_op(table: OpTable, t: Optional["TotalOrder"] = None) -> bool:
    """True when every value lies in the chain interval between its arguments."""
    n = table.n
    rank = _rank_vector(t, n)
    v = table.values
    for x in range(n):
        for y in range(n):
            r = rank[v[x][y] - 1]
            rx, ry = rank[x], rank[y]
            if r < min(rx, ry) or r > max(rx, ry):
                return False
    return True


def zero_element(table: OpTable) -> Optional[int]:
    """The absorbing element a with F(a,x) = F(x,a) = a for all x, if any."""
    v = table.values
    for a in range(table.n):
        if all(v[a][x] == a + 1 and v[x][a] == a + 1 for x in range(table.n)):
            return a + 1
    return None


def neutral_element(table: OpTable) -> Optional[int]:
    """The element e with F(e,x) = F(x,e) = x for all x, if any."""
    v = table.values
    for e in range(table.n):
        if all(v[e][x] == x + 1 and v[x][e] == x + 1 for x in range(table.n)):
            return e + 1
    return None


def degree_sequence(table: OpTable) -> DegreeSequence:
    counts = [0] * table.n
    for row in table.values:
        for value in row:
            counts[value - 1] += 1
    return DegreeSequence(tuple(counts))


# ---------------------------------------------------------------------------
# file formats

def format_table(table: OpTable) -> str:
    """Text form: first line n, then n rows of n space-separated values."""
    lines = [str(table.n)]
    lines.extend(" ".join(str(v) for v in row) for row in table.values)
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> OpTable:
    """Parse the text table format, rejecting malformed or out-of-range input."""
    rows: list[tuple[int, ...]] = []
    n = None
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
        if len(rows) >= n:
            raise ParseError("unexpected extra row", lineno)
        try:
            row = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", lineno)
        for v in row:
            if not 1 <= v <= n:
                raise ParseError(f"entry {v} outside 1..{n}", lineno)
        rows.append(row)
    if n is None:
        raise ParseError("empty table file")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}")
    return OpTable(n, tuple(rows))


def table_to_json(table: OpTable) -> str:
    return json.dumps({"n": table.n, "table": [list(row) for row in table.values]})


def table_from_json(text: str) -> OpTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "table" not in doc:
        raise ParseError('JSON table needs keys "n" and "table"')
    n, rows = doc["n"], doc["table"]
    if not isinstance(n, int) or not isinstance(rows, list):
        raise ParseError("malformed JSON table")
    try:
        return OpTable(n, tuple(tuple(int(v) for v in row) for row in rows))
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def load_table(path) -> OpTable:
    """Read a table file, accepting either the text or the JSON format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return table_from_json(text)
    return parse_table(text)

"""k-ary operations on {1..n}: associativity, the elementary property
predicates, extension of a binary associative operation by left nesting,
and reduction back to the binary operation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Optional

from .errors import (
    BoundExceeded,
    NotAssociative,
    ParseError,
    PreconditionViolated,
    ReductionMismatch,
)
from .tables import OpTable, is_associative

if TYPE_CHECKING:
    from .orders import TotalOrder

MAX_TABLE_CELLS = 4_000_000
MAX_ASSOCIATIVITY_TUPLES = 10_000_000


@dataclass(frozen=True)
class KaryOpTable:
    """A k-ary operation on {1..n} stored densely, indexed in row-major
    tuple order with the last coordinate varying fastest."""

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("arity must be at least 2")
        if self.n < 0:
            raise ValueError("ground set size must be nonnegative")
        size = self.n**self.k
        if size > MAX_TABLE_CELLS:
            raise BoundExceeded(f"{self.n}^{self.k} cells exceed the memory bound")
        if len(self.values) != size:
            raise ValueError(f"expected {size} values, got {len(self.values)}")
        for v in self.values:
            if not 1 <= v <= self.n:
                raise ValueError(f"entry {v} outside 1..{self.n}")

    @classmethod
    def from_function(cls, n: int, k: int, fn) -> "KaryOpTable":
        values = tuple(fn(*args) for args in product(range(1, n + 1), repeat=k))
        return cls(n, k, values)

    def _index(self, args: tuple[int, ...]) -> int:
        idx = 0
        for a in args:
            idx = idx * self.n + (a - 1)
        return idx

    def __call__(self, *args: int) -> int:
        if len(args) != self.k:
            raise ValueError(f"expected {self.k} arguments, got {len(args)}")
        return self.values[self._index(args)]


def is_kary_associative(table: KaryOpTable) -> bool:
    """Check the k-ary associativity identity over all (2k-1)-tuples and
    every nesting position."""
    n, k = table.n, table.k
    if n > 1 and n ** (2 * k - 1) > MAX_ASSOCIATIVITY_TUPLES:
        raise BoundExceeded(f"{n}^{2 * k - 1} tuples exceed the check bound")
    for args in product(range(1, n + 1), repeat=2 * k - 1):
        first = None
        for i in range(k):
            inner = table(*args[i : i + k])
            outer = table(*(args[:i] + (inner,) + args[i + k :]))
            if first is None:
                first = outer
            elif outer != first:
                return False
    return True


def is_kary_symmetric(table: KaryOpTable) -> bool:
    """Symmetry via sorted-tuple canonicalization rather than all k!
    permutations."""
    for args in product(range(1, table.n + 1), repeat=table.k):
        if table(*args) != table(*sorted(args)):
            return False
    return True


def is_kary_idempotent(table: KaryOpTable) -> bool:
    return all(table(*((x,) * table.k)) == x for x in range(1, table.n + 1))


def is_kary_preserving(table: KaryOpTable, t: Optional["TotalOrder"] = None) -> bool:
    """Monotone in every coordinate with respect to the chain t (natural
    order when t is None)."""
    n, k = table.n, table.k
    if t is None:
        rank = tuple(range(1, n + 1))
        chain = tuple(range(1, n + 1))
    else:
        rank = t.rank
        chain = t.bottom_to_top()
    successor = {chain[i]: chain[i + 1] for i in range(n - 1)}
    for args in product(range(1, n + 1), repeat=k):
        base = rank[table(*args) - 1]
        for j in range(k):
            nxt = successor.get(args[j])
            if nxt is None:
                continue
            bumped = args[:j] + (nxt,) + args[j + 1 :]
            if rank[table(*bumped) - 1] < base:
                return False
    return True


def extend(table: OpTable, k: int) -> KaryOpTable:
    """Left-nested k-ary composition of a binary associative operation."""
    if k < 2:
        raise ValueError("arity must be at least 2")
    if not is_associative(table):
        raise NotAssociative("extension requires an associative binary table")
    n = table.n
    if n**k > MAX_TABLE_CELLS:
        raise BoundExceeded(f"{n}^{k} cells exceed the memory bound")
    current = tuple(v for row in table.values for v in row)
    for _ in range(k - 2):
        nxt = []
        for value in current:
            row = table.values[value - 1]
            nxt.extend(row)
        current = tuple(nxt)
    return KaryOpTable(n, k, current)


def reduce_to_binary(table: KaryOpTable) -> OpTable:
    """Recover the binary operation G(x, y) = F(x, ..., x, y) from a k-ary
    associative, idempotent, symmetric, monotone operation; the re-extension
    is verified cell for cell."""
    if not is_kary_idempotent(table):
        raise PreconditionViolated("k-ary table is not idempotent")
    if not is_kary_symmetric(table):
        raise PreconditionViolated("k-ary table is not symmetric")
    if not is_kary_preserving(table):
        raise PreconditionViolated("k-ary table is not monotone for the natural chain")
    if not is_kary_associative(table):
        raise PreconditionViolated("k-ary table is not associative")
    n, k = table.n, table.k
    binary = OpTable.from_function(
        n, lambda x, y: table(*((x,) * (k - 1) + (y,)))
    )
    if extend(binary, k).values != table.values:
        raise ReductionMismatch("re-extension does not reproduce the k-ary table")
    return binary


# ---------------------------------------------------------------------------
# file format

def format_kary(table: KaryOpTable) -> str:
    """Header 'n k', then the n^k values in row-major tuple order, one row
    of n values per line."""
    lines = [f"{table.n} {table.k}"]
    n = max(table.n, 1)
    for i in range(0, len(table.values), n):
        lines.append(" ".join(str(v) for v in table.values[i : i + n]))
    return "\n".join(lines) + "\n"


def parse_kary(text: str) -> KaryOpTable:
    header = None
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError("expected header 'n k'", lineno)
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ParseError(f"invalid header {line!r}", lineno) from None
            continue
        try:
            row = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        n = header[0]
        for v in row:
            if not 1 <= v <= n:
                raise ParseError(f"entry {v} outside 1..{n}", lineno)
        values.extend(row)
    if header is None:
        raise ParseError("empty k-ary table file")
    n, k = header
    try:
        return KaryOpTable(n, k, tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def kary_to_json(table: KaryOpTable) -> str:
    return json.dumps({"n": table.n, "k": table.k, "values": list(table.values)})


def kary_from_json(text: str) -> KaryOpTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    try:
        return KaryOpTable(doc["n"], doc["k"], tuple(int(v) for v in doc["values"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def load_kary(path) -> KaryOpTable:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return kary_from_json(text)
    return parse_kary(text)

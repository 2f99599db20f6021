"""Partitions, Young diagrams, tableaux, and the row/column orders.

Shapes are plain tuples of weakly decreasing positive ints.  Boxes are
1-based (row, col) pairs.  A tableau is an immutable filling of a shape by
positive integers; the entry alphabet is always an initial segment {1..m}
of the naturals, with m supplied where it matters (enumeration, bases).

The comparison functions implement the multiset column/row orders on
same-shape tableaux: find the largest entry whose per-column (per-row)
content multisets differ, then the smallest column (row) where it differs;
the tableau holding that entry there is the greater one.  Tableaux whose
column (row) contents all agree are incomparable.
"""

from __future__ import annotations

import enum
from functools import cache
from itertools import combinations, combinations_with_replacement, product
from math import comb


# ---------------------------------------------------------------------------
# partitions


def check_partition(parts) -> tuple[int, ...]:
    """Validate and return a partition as a tuple."""
    shape = tuple(parts)
    for p in shape:
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"invalid partition {shape}: parts must be positive integers")
    for a, b in zip(shape, shape[1:]):
        if a < b:
            raise ValueError(f"invalid partition {shape}: parts must weakly decrease")
    return shape


def conjugate(shape) -> tuple[int, ...]:
    """The transposed partition: entry i counts the parts >= i+1."""
    shape = check_partition(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p >= i) for i in range(1, shape[0] + 1))


def diagram_boxes(shape) -> tuple[tuple[int, int], ...]:
    """All boxes (i, j), 1-based, in row-major order."""
    return tuple((i, j) for i, row_len in enumerate(shape, 1) for j in range(1, row_len + 1))


def partitions_of(n: int):
    """Partitions of n in lexicographically decreasing order."""

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def partitions_up_to(n: int):
    """All nonempty partitions of size 1..n."""
    for k in range(1, n + 1):
        yield from partitions_of(k)


# ---------------------------------------------------------------------------
# tableaux


class Tableau:
    """An immutable filling of a Young diagram with entries in {1, 2, ...}."""

    __slots__ = ("rows", "shape", "_hash", "_key")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        shape = tuple(len(r) for r in rows)
        check_partition(shape)
        for row in rows:
            for v in row:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"tableau entries must be positive integers, got {v!r}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "_hash", hash(rows))
        object.__setattr__(self, "_key", None)

    @classmethod
    def _fresh(cls, rows: tuple[tuple[int, ...], ...]) -> "Tableau":
        """Internal constructor skipping validation (rows already canonical)."""
        self = object.__new__(cls)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", tuple(len(r) for r in rows))
        object.__setattr__(self, "_hash", hash(rows))
        object.__setattr__(self, "_key", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def max_entry(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    def entry(self, i: int, j: int) -> int:
        """Entry in box (i, j), 1-based."""
        return self.rows[i - 1][j - 1]

    @property
    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    @property
    def sort_key(self):
        """Deterministic total order: reading word, then shape."""
        if self._key is None:
            object.__setattr__(self, "_key", (self.reading_word, self.shape))
        return self._key

    def column_entries(self, j: int) -> tuple[int, ...]:
        """Entries of column j, top to bottom."""
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    @property
    def is_row_semistandard(self) -> bool:
        return all(all(a <= b for a, b in zip(row, row[1:])) for row in self.rows)

    @property
    def is_column_standard(self) -> bool:
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True

    @property
    def is_semistandard(self) -> bool:
        return self.is_row_semistandard and self.is_column_standard

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "Tableau":
        rows = obj["rows"] if isinstance(obj, dict) else obj
        t = cls(rows)
        if isinstance(obj, dict) and "shape" in obj and tuple(obj["shape"]) != t.shape:
            raise ValueError("tableau shape field disagrees with rows")
        return t


def tableau_to_json(t: Tableau) -> dict:
    return t.to_json()


def tableau_from_json(obj) -> Tableau:
    return Tableau.from_json(obj)


# ---------------------------------------------------------------------------
# orders


class OrderVerdict(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _content_counts(line) -> dict[int, int]:
    counts: dict[int, int] = {}
    for v in line:
        counts[v] = counts.get(v, 0) + 1
    return counts


def _compare_by_contents(t_lines, u_lines) -> OrderVerdict:
    # Find the largest entry in any per-line multiset symmetric difference,
    # then the first line where it differs; more copies there means greater.
    best = None  # (entry, line index, sign)
    for idx, (a, b) in enumerate(zip(t_lines, u_lines)):
        ca, cb = _content_counts(a), _content_counts(b)
        for v in set(ca) | set(cb):
            da = ca.get(v, 0) - cb.get(v, 0)
            if da == 0:
                continue
            cand = (v, -idx)
            if best is None or cand > best[:2]:
                best = (v, -idx, da)
    if best is None:
        return OrderVerdict.INCOMPARABLE
    return OrderVerdict.GREATER if best[2] > 0 else OrderVerdict.LESS


def compare_columns(t: Tableau, u: Tableau) -> OrderVerdict:
    """Column order verdict for t relative to u (LESS means t < u)."""
    if t.shape != u.shape:
        raise ValueError("shape mismatch")
    ncols = t.shape[0] if t.shape else 0
    return _compare_by_contents(
        [t.column_entries(j) for j in range(1, ncols + 1)],
        [u.column_entries(j) for j in range(1, ncols + 1)],
    )


def compare_rows(t: Tableau, u: Tableau) -> OrderVerdict:
    """Row order verdict for t relative to u (LESS means t < u)."""
    if t.shape != u.shape:
        raise ValueError("shape mismatch")
    return _compare_by_contents(t.rows, u.rows)


def row_order_key(t: Tableau, max_entry: int) -> tuple:
    """Sort key whose natural order agrees with the row order on one shape.

    Scans entry values downward and rows top-to-bottom, recording content
    counts; lexicographic comparison of these vectors finds exactly the
    largest differing entry and the highest row where it differs.
    """
    counts = [_content_counts(row) for row in t.rows]
    return tuple(c.get(v, 0) for v in range(max_entry, 0, -1) for c in counts)


def column_order_key(t: Tableau, max_entry: int) -> tuple:
    """Column-order analogue of :func:`row_order_key`."""
    ncols = t.shape[0] if t.shape else 0
    counts = [_content_counts(t.column_entries(j)) for j in range(1, ncols + 1)]
    return tuple(c.get(v, 0) for v in range(max_entry, 0, -1) for c in counts)


# ---------------------------------------------------------------------------
# sorting within rows / columns


def sort_rows(t: Tableau) -> Tableau:
    """Canonical representative of t's row class: each row sorted ascending."""
    return Tableau._fresh(tuple(tuple(sorted(row)) for row in t.rows))


def _inversions(seq) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


def sort_columns(t: Tableau):
    """Sort every column ascending, tracking the sign of the permutation used.

    Returns ``(sign, tableau)``, or ``None`` when some column repeats an
    entry (so no column-standard rearrangement exists and the alternating
    class collapses to zero).
    """
    ncols = t.shape[0] if t.shape else 0
    sign = 1
    cols = []
    for j in range(1, ncols + 1):
        col = t.column_entries(j)
        if len(set(col)) != len(col):
            return None
        sign *= -1 if _inversions(col) % 2 else 1
        cols.append(sorted(col))
    rows = tuple(
        tuple(cols[j][i] for j in range(row_len)) for i, row_len in enumerate(t.shape)
    )
    return sign, Tableau._fresh(rows)


# ---------------------------------------------------------------------------
# enumeration

ALL = "all"
ROW_SEMISTANDARD = "row_semistandard"
COLUMN_STANDARD = "column_standard"
SEMISTANDARD = "semistandard"

_CLASSES = (ALL, ROW_SEMISTANDARD, COLUMN_STANDARD, SEMISTANDARD)


def _iter_all(shape, m):
    n = sum(shape)
    for word in product(range(1, m + 1), repeat=n):
        rows = []
        pos = 0
        for row_len in shape:
            rows.append(word[pos : pos + row_len])
            pos += row_len
        yield Tableau._fresh(tuple(rows))


def _iter_row_semistandard(shape, m):
    per_row = [list(combinations_with_replacement(range(1, m + 1), k)) for k in shape]
    for rows in product(*per_row):
        yield Tableau._fresh(rows)


def _iter_column_standard(shape, m):
    cols_shape = conjugate(shape)
    per_col = [list(combinations(range(1, m + 1), k)) for k in cols_shape]
    for cols in product(*per_col):
        rows = tuple(
            tuple(cols[j][i] for j in range(row_len)) for i, row_len in enumerate(shape)
        )
        yield Tableau._fresh(rows)


def _iter_semistandard(shape, m):
    boxes = diagram_boxes(shape)
    n = len(boxes)
    grid: list[list[int]] = [[0] * k for k in shape]

    def fill(pos):
        if pos == n:
            yield Tableau._fresh(tuple(tuple(r) for r in grid))
            return
        i, j = boxes[pos]
        lo = 1
        if j > 1:
            lo = max(lo, grid[i - 1][j - 2])  # weakly increasing along the row
        if i > 1:
            lo = max(lo, grid[i - 2][j - 1] + 1)  # strictly increasing down the column
        for v in range(lo, m + 1):
            grid[i - 1][j - 1] = v
            yield from fill(pos + 1)
        grid[i - 1][j - 1] = 0

    yield from fill(0)


@cache
def enumerate_tableaux(shape, max_entry: int, kind: str = ALL) -> tuple[Tableau, ...]:
    """All tableaux of the shape with entries in {1..max_entry}, in reading-word order."""
    shape = check_partition(shape)
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    if kind not in _CLASSES:
        raise ValueError(f"unknown tableau class {kind!r}")
    gen = {
        ALL: _iter_all,
        ROW_SEMISTANDARD: _iter_row_semistandard,
        COLUMN_STANDARD: _iter_column_standard,
        SEMISTANDARD: _iter_semistandard,
    }[kind]
    out = list(gen(shape, max_entry))
    out.sort(key=lambda t: t.sort_key)
    return tuple(out)


def count_tableaux(shape, max_entry: int, kind: str = ALL) -> int:
    """Cardinality of :func:`enumerate_tableaux` without materializing "all"."""
    shape = check_partition(shape)
    if kind == ALL:
        return max_entry ** sum(shape)
    if kind == ROW_SEMISTANDARD:
        out = 1
        for k in shape:
            out *= comb(k + max_entry - 1, k)
        return out
    if kind == COLUMN_STANDARD:
        out = 1
        for k in conjugate(shape):
            out *= comb(max_entry, k)
        return out
    return len(enumerate_tableaux(shape, max_entry, kind))

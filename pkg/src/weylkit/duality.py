"""Duality pairing, matrix actions on entries, and equivariance checks.

The pairing realization works entirely in explicit bases: a functional on
the upper symmetric power is a coordinate vector over sorted-row labels,
and its image in the exterior power is assembled by evaluating it against
every polytabloid of a column-standard tableau.  For row-sorted t this
image coincides with the copolytabloid of t, which ``pairing_image`` makes
checkable instance by instance.

Group elements act as invertible matrices on the entry alphabet, extended
multilinearly over the boxes; the induced actions on the quotient and
subspace models are computed through their tensor representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd

from .coeffs import QQ, ZZ, CoefficientRing, LinComb
from .linalg import solve_exact
from .powers import (
    ColumnTabloidElement,
    RowTabloidElement,
    SymLowerElement,
    TableauElement,
    TensorElement,
    rsym,
    sym_lower_coords,
    sym_lower_expand,
    to_row_tabloid,
    wedge_project,
)
from .schur import apply_polytabloid_map, polytabloid
from .tableaux import (
    COLUMN_STANDARD,
    ROW_SEMISTANDARD,
    SEMISTANDARD,
    Tableau,
    check_partition,
    enumerate_tableaux,
    sort_rows,
)
from .weyl import copolytabloid


def _det_int(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    mat = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if mat[i][k] != 0), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


class EntryMatrix:
    """An invertible matrix acting on the entry alphabet {1..m}.

    Entry ``(a, b)`` (1-based) is the coefficient of basis vector a in the
    image of basis vector b.  Over the integers the determinant must be
    +-1; over Z/n it must be a unit; over the rationals, nonzero.
    """

    __slots__ = ("ring", "entries", "size")

    def __init__(self, ring: CoefficientRing, entries):
        rows = tuple(tuple(ring.normalize(v) for v in row) for row in entries)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("entry matrix must be square")
        self.ring = ring
        self.entries = rows
        self.size = m
        det = self._det()
        if not self._det_is_unit(det):
            raise ValueError("non-invertible entry matrix")

    def _det(self):
        if self.ring == QQ:
            num_rows = [[Fraction(v) for v in row] for row in self.entries]
            # clear denominators so the integer routine applies
            scale = 1
            for row in num_rows:
                for v in row:
                    scale = scale * v.denominator // gcd(scale, v.denominator)
            int_rows = [[int(v * scale) for v in row] for row in num_rows]
            d = _det_int(int_rows)
            return Fraction(d, scale**self.size)
        return _det_int([list(row) for row in self.entries])

    def _det_is_unit(self, det) -> bool:
        if self.ring.kind == "z":
            return det in (1, -1)
        if self.ring == QQ:
            return det != 0
        return gcd(det % self.ring.modulus, self.ring.modulus) == 1

    @classmethod
    def identity(cls, m: int, ring: CoefficientRing = ZZ) -> "EntryMatrix":
        return cls(ring, [[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def permutation(cls, images: tuple[int, ...], ring: CoefficientRing = ZZ) -> "EntryMatrix":
        """Matrix sending basis vector b to basis vector images[b-1] (1-based)."""
        m = len(images)
        rows = [[0] * m for _ in range(m)]
        for b, a in enumerate(images, 1):
            rows[a - 1][b - 1] = 1
        return cls(ring, rows)

    def entry(self, a: int, b: int):
        return self.entries[a - 1][b - 1]

    def __eq__(self, other):
        return (
            isinstance(other, EntryMatrix)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        return f"EntryMatrix({self.ring.tag}, {[list(r) for r in self.entries]})"

    def compose(self, other: "EntryMatrix") -> "EntryMatrix":
        """Matrix product self @ other: apply other first."""
        if self.ring != other.ring or self.size != other.size:
            raise ValueError("ring mismatch")
        m = self.size
        rows = [
            [
                sum(self.entries[a][k] * other.entries[k][b] for k in range(m))
                for b in range(m)
            ]
            for a in range(m)
        ]
        return EntryMatrix(self.ring, rows)


def _act_on_label(t: Tableau, g: EntryMatrix) -> LinComb:
    """Multilinear expansion of the entrywise action on one tableau."""
    ring = g.ring
    boxes = [(i, j) for i, row in enumerate(t.rows, 1) for j in range(1, len(row) + 1)]
    partial: dict[tuple[int, ...], object] = {(): ring.one}
    for i, j in boxes:
        b = t.entry(i, j)
        column = [(a, g.entry(a, b)) for a in range(1, g.size + 1) if g.entry(a, b) != 0]
        new: dict[tuple[int, ...], object] = {}
        for word, coeff in partial.items():
            for a, gv in column:
                key = word + (a,)
                val = ring.mul(coeff, gv)
                if key in new:
                    val = ring.add(new[key], val)
                new[key] = val
        partial = new
    terms = []
    for word, coeff in partial.items():
        rows = []
        pos = 0
        for row_len in t.shape:
            rows.append(word[pos : pos + row_len])
            pos += row_len
        terms.append((Tableau._fresh(tuple(rows)), coeff))
    return LinComb(ring, terms)


def entry_action(x: TableauElement, g: EntryMatrix) -> TableauElement:
    """Entrywise matrix action on any element type, landing in the same space."""
    if x.ring != g.ring:
        raise ValueError("ring mismatch")
    for t in x.labels():
        if t.max_entry > g.size:
            raise ValueError("entry matrix too small for the element's alphabet")
    if isinstance(x, SymLowerElement):
        acted = entry_action(sym_lower_expand(x), g)
        return sym_lower_coords(acted)
    moved = LinComb.zero(x.ring)
    for t, c in x.lin.items():
        moved = moved.combine(_act_on_label(t, g), 1, c)
    tensor = TensorElement(moved)
    if isinstance(x, TensorElement):
        return tensor
    if isinstance(x, RowTabloidElement):
        return to_row_tabloid(tensor)
    if isinstance(x, ColumnTabloidElement):
        return wedge_project(tensor)
    raise TypeError(f"unsupported element type {type(x).__name__}")


# ---------------------------------------------------------------------------
# the pairing


@dataclass(frozen=True)
class DualFunctional:
    """A functional on the upper symmetric power, in sorted-row coordinates."""

    lin: LinComb

    def __post_init__(self):
        for t in self.lin.labels():
            if not t.is_row_semistandard:
                raise ValueError("dual functionals are indexed by sorted-row labels")

    def evaluate(self, x: RowTabloidElement):
        ring = self.lin.ring
        if x.ring != ring:
            raise ValueError("ring mismatch")
        total = ring.zero
        for t, c in self.lin.items():
            total = ring.add(total, ring.mul(c, x.coeff(t)))
        return total


def pairing_image(t: Tableau, max_entry: int, ring: CoefficientRing = ZZ) -> ColumnTabloidElement:
    """Image in the exterior power of the functional dual to t's row tabloid.

    For each column-standard u, the coefficient of u is the evaluation of
    the functional against the polytabloid of u.  For row-sorted t this
    equals the copolytabloid of t.
    """
    canon = sort_rows(t)
    if canon.max_entry > max_entry:
        raise ValueError("tableau entries exceed the alphabet")
    functional = DualFunctional(LinComb(ring, {canon: 1}))
    terms = []
    for u in enumerate_tableaux(canon.shape, max_entry, COLUMN_STANDARD):
        coeff = functional.evaluate(polytabloid(u, ring))
        if coeff != 0:
            terms.append((u, coeff))
    return ColumnTabloidElement(LinComb(ring, terms))


@cache
def _polytabloid_basis_solver(shape, max_entry: int):
    """Columns of the polytabloid basis matrix over sorted-row labels."""
    ssyt = enumerate_tableaux(shape, max_entry, SEMISTANDARD)
    columns = []
    for s in ssyt:
        columns.append({l: c for l, c in polytabloid(s, QQ).items()})
    return ssyt, columns


def polytabloid_dual_image(t: Tableau, max_entry: int) -> ColumnTabloidElement:
    """Image of the functional dual to t's polytabloid, over the rationals.

    The functional picks out t's coefficient when a polytabloid is written
    in the semistandard polytabloid basis; its image is assembled exactly
    like :func:`pairing_image`.  t must be semistandard.
    """
    if not t.is_semistandard:
        raise ValueError("polytabloid duals are indexed by semistandard tableaux")
    ssyt, columns = _polytabloid_basis_solver(t.shape, max_entry)
    position = ssyt.index(t)
    terms = []
    for u in enumerate_tableaux(t.shape, max_entry, COLUMN_STANDARD):
        target = {l: c for l, c in polytabloid(u, QQ).items()}
        solution = solve_exact(columns, target)
        if solution is None:
            raise RuntimeError("polytabloid failed to decompose over the semistandard basis")
        if solution[position] != 0:
            terms.append((u, solution[position]))
    return ColumnTabloidElement(LinComb(QQ, terms))


def find_dual_basis_mismatch(shapes, entry_range) -> dict | None:
    """Search for a semistandard t whose polytabloid dual misses its copolytabloid.

    Returns a witness payload, or None when every checked instance agrees
    (in which case nothing is asserted about larger instances).
    """
    for shape in shapes:
        shape = check_partition(shape)
        for m in entry_range:
            for t in enumerate_tableaux(shape, m, SEMISTANDARD):
                image = polytabloid_dual_image(t, m)
                expected = copolytabloid(t, QQ)
                if image != expected:
                    return {
                        "shape": list(shape),
                        "entries": m,
                        "tableau": t.to_json(),
                        "dual_image": image.to_json(),
                        "copolytabloid": expected.to_json(),
                    }
    return None


# ---------------------------------------------------------------------------
# equivariance


WEDGE_MAP = "lambda"
POLYTABLOID_MAP = "e"


def equivariance_counterexample(shape, max_entry: int, g: EntryMatrix, which: str):
    """First basis label where the map fails to commute with the action, or None."""
    shape = check_partition(shape)
    if g.size < max_entry:
        raise ValueError("entry matrix too small for the alphabet")
    if which == WEDGE_MAP:
        for t in enumerate_tableaux(shape, max_entry, ROW_SEMISTANDARD):
            source = rsym(t, g.ring)
            lhs = wedge_project(entry_action(source, g))
            rhs = entry_action(copolytabloid(t, g.ring), g)
            if lhs != rhs:
                return {"tableau": t.to_json(), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
        return None
    if which == POLYTABLOID_MAP:
        for u in enumerate_tableaux(shape, max_entry, COLUMN_STANDARD):
            source = ColumnTabloidElement(LinComb(g.ring, {u: 1}))
            lhs = apply_polytabloid_map(entry_action(source, g))
            rhs = entry_action(polytabloid(u, g.ring), g)
            if lhs != rhs:
                return {"tableau": u.to_json(), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
        return None
    raise ValueError(f"unknown map {which!r}")


def equivariance_check(shape, max_entry: int, g: EntryMatrix, which: str) -> bool:
    return equivariance_counterexample(shape, max_entry, g, which) is None

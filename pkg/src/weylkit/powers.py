"""Tensor, symmetric-power and exterior-power elements on tableau labels.

Every element is a sparse linear combination of same-shape tableaux, with
labels canonical for its space:

* :class:`TensorElement` -- any tableau labels (pure tensors);
* :class:`RowTabloidElement` -- labels with rows sorted ascending, the basis
  of the upper symmetric power;
* :class:`SymLowerElement` -- row-sorted labels read as coordinates over the
  row-symmetrised basis of the space of symmetric tensors;
* :class:`ColumnTabloidElement` -- column-standard labels, the basis of the
  exterior power, with signs absorbed into coefficients.
"""

from __future__ import annotations

from functools import cache

from .coeffs import ZZ, CoefficientRing, LinComb, parse_ring
from .tableaux import Tableau, sort_columns, sort_rows, tableau_from_json, tableau_to_json
from .places import row_orbit


class TableauElement:
    """Shared behavior for elements whose labels are same-shape tableaux."""

    space = "?"
    __slots__ = ("lin",)

    def __init__(self, lin: LinComb):
        shapes = {t.shape for t in lin.labels()}
        if len(shapes) > 1:
            raise ValueError("all labels of an element must share one shape")
        for t in lin.labels():
            self._check_label(t)
        self.lin = lin

    def _check_label(self, t: Tableau):
        pass

    @classmethod
    def zero(cls, ring: CoefficientRing = ZZ):
        return cls(LinComb.zero(ring))

    @classmethod
    def from_terms(cls, ring: CoefficientRing, terms):
        return cls(LinComb(ring, terms))

    @property
    def ring(self) -> CoefficientRing:
        return self.lin.ring

    @property
    def is_zero(self) -> bool:
        return self.lin.is_zero

    @property
    def shape(self):
        for t in self.lin.labels():
            return t.shape
        return None

    def coeff(self, t: Tableau):
        return self.lin.coeff(t)

    def items(self):
        return self.lin.items()

    def labels(self):
        return self.lin.labels()

    def combine(self, other, ca=1, cb=1):
        if type(other) is not type(self):
            raise TypeError("cannot mix elements of different spaces")
        return type(self)(self.lin.combine(other.lin, ca, cb))

    def __add__(self, other):
        return self.combine(other)

    def __sub__(self, other):
        return self.combine(other, 1, -1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c):
        return type(self)(self.lin.scaled(c))

    def change_ring(self, target: CoefficientRing):
        return type(self)(self.lin.change_ring(target))

    def __eq__(self, other):
        return type(other) is type(self) and self.lin == other.lin

    def __hash__(self):
        return hash((self.space, self.lin))

    def __repr__(self):
        return f"{type(self).__name__}({self.lin!r})"

    def to_json(self) -> dict:
        obj = {"space": self.space}
        obj.update(self.lin.to_json(tableau_to_json))
        return obj


class TensorElement(TableauElement):
    space = "tensor"


class RowTabloidElement(TableauElement):
    space = "sym_upper"

    def _check_label(self, t):
        if not t.is_row_semistandard:
            raise ValueError("row tabloid labels must have sorted rows")


class SymLowerElement(TableauElement):
    space = "sym_lower"

    def _check_label(self, t):
        if not t.is_row_semistandard:
            raise ValueError("row-symmetrised coordinates must have sorted-row labels")


class ColumnTabloidElement(TableauElement):
    space = "wedge"

    def _check_label(self, t):
        if not t.is_column_standard:
            raise ValueError("column tabloid labels must be column standard")


_SPACES = {
    cls.space: cls
    for cls in (TensorElement, RowTabloidElement, SymLowerElement, ColumnTabloidElement)
}


def element_from_json(obj: dict) -> TableauElement:
    cls = _SPACES.get(obj.get("space"))
    if cls is None:
        raise ValueError(f"unknown element space {obj.get('space')!r}")
    return cls(LinComb.from_json(obj, tableau_from_json))


# ---------------------------------------------------------------------------
# the maps


def rsym(t: Tableau, ring: CoefficientRing = ZZ) -> TensorElement:
    """Row symmetrisation: the sum of the distinct row rearrangements of t."""
    lin = LinComb(ZZ, ((u, 1) for u in row_orbit(t)))
    if ring != ZZ:
        lin = lin.change_ring(ring)
    return TensorElement(lin)


def to_row_tabloid(x: TensorElement) -> RowTabloidElement:
    """Project a tensor onto the upper symmetric power (sort each label's rows)."""
    return RowTabloidElement(LinComb(x.ring, ((sort_rows(t), c) for t, c in x.lin.items())))


def wedge_project(x: TensorElement) -> ColumnTabloidElement:
    """Project a tensor onto the exterior power.

    Labels with a repeated column entry vanish; all others sort to their
    column-standard form with the sign of the sorting permutation.
    """
    terms = []
    for t, c in x.lin.items():
        sorted_ = sort_columns(t)
        if sorted_ is None:
            continue
        sign, u = sorted_
        terms.append((u, c if sign == 1 else -c))
    return ColumnTabloidElement(LinComb(x.ring, terms))


def sym_lower_coords(x: TensorElement) -> SymLowerElement:
    """Coordinates of a symmetric tensor over the row-symmetrised basis.

    The coefficient of each sorted-row label is its coordinate; the element
    must be exactly the resulting combination, else it is not symmetric.
    """
    coords = [(t, c) for t, c in x.lin.items() if t.is_row_semistandard]
    out = SymLowerElement(LinComb(x.ring, coords))
    if sym_lower_expand(out) != x:
        raise ValueError("element not in Sym_λ")
    return out


def sym_lower_expand(x: SymLowerElement) -> TensorElement:
    """The symmetric tensor with the given row-symmetrised coordinates."""
    out = LinComb.zero(x.ring)
    for t, c in x.lin.items():
        out = out.combine(rsym(t, x.ring).lin, 1, c)
    return TensorElement(out)


@cache
def _wedge_of_rsym_int(t_sorted: Tableau) -> LinComb:
    """Integer expansion of the wedge projection of one row symmetrisation."""
    terms: dict[Tableau, int] = {}
    for u in row_orbit(t_sorted):
        sorted_ = sort_columns(u)
        if sorted_ is None:
            continue
        sign, w = sorted_
        terms[w] = terms.get(w, 0) + sign
    return LinComb(ZZ, terms)


def wedge_of_sym_lower(x: SymLowerElement) -> ColumnTabloidElement:
    """Wedge projection of a symmetric tensor given by its coordinates."""
    acc = LinComb.zero(x.ring)
    for t, c in x.lin.items():
        expansion = _wedge_of_rsym_int(t)
        if x.ring != ZZ:
            expansion = expansion.change_ring(x.ring)
        acc = acc.combine(expansion, 1, c)
    return ColumnTabloidElement(acc)

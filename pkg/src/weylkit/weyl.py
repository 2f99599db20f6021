"""Copolytabloids, dual Garnir and dual snake relations, and straightening.

The copolytabloid of a tableau is the wedge projection of its row
symmetrisation.  The kernel of that projection on symmetric tensors is
spanned by the dual Garnir relations: for box sets A, B in two rows with
|A| + |B| exceeding the upper row's length, sum the row symmetrisations of
the distinct rearrangements of the entries on A | B, one term per row
class, each weighted by the index of its split row stabilizer inside its
full row stabilizer.  Those weights are what make the sums land in the
kernel; the two tempting simplifications (plain coset sums, and full
row-group sums) are kept as named variants because they fail in
instructive ways.

Dual snake relations are the adjacent-row relations taking a right segment
of the upper row and a left segment of the lower row.  When the segments
are aligned with runs of equal entries, the relation has unit leading
coefficient on its own label and all other labels strictly smaller in the
row order, which is exactly what ``straighten`` exploits to rewrite any
element into semistandard coordinates with a certificate.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .coeffs import ZZ, CoefficientRing, LinComb
from .linalg import rank_of_rows, smith_elementary_divisors
from .places import (
    class_index,
    check_two_row_boxsets,
    double_coset_reps,
    row_stabilizer_order,
    sab_cosets_star,
    sab_orbit_row_classes,
)
from .powers import ColumnTabloidElement, SymLowerElement, wedge_of_sym_lower
from .schur import SizeCapExceeded, _check_caps
from .tableaux import (
    ROW_SEMISTANDARD,
    SEMISTANDARD,
    COLUMN_STANDARD,
    Tableau,
    check_partition,
    enumerate_tableaux,
    row_order_key,
    sort_rows,
)


@cache
def _copolytabloid_int(t_sorted: Tableau) -> LinComb:
    from .powers import _wedge_of_rsym_int

    return _wedge_of_rsym_int(t_sorted)


def copolytabloid(t: Tableau, ring: CoefficientRing = ZZ) -> ColumnTabloidElement:
    """Wedge projection of the row symmetrisation of t; constant on row classes."""
    lin = _copolytabloid_int(sort_rows(t))
    if ring != ZZ:
        lin = lin.change_ring(ring)
    return ColumnTabloidElement(lin)


DUAL_GARNIR = "dual_garnir"
DUAL_SNAKE = "dual_snake"
STAR_VARIANT = "star"
STAR_STAR_VARIANT = "star_star"


@dataclass(frozen=True)
class WeylRelation:
    kind: str
    tableau: Tableau
    box_a: frozenset
    box_b: frozenset
    element: SymLowerElement
    snake: tuple[int, int, int] | None = None

    def label_json(self) -> dict:
        from .places import boxset_to_json

        out = {
            "kind": self.kind,
            "tableau": self.tableau.to_json(),
            "boxA": boxset_to_json(self.box_a),
            "boxB": boxset_to_json(self.box_b),
        }
        if self.snake is not None:
            i, j, jp = self.snake
            out["row"] = i
            out["cols"] = [j, jp]
        return out


def _check_dual_garnir_label(t: Tableau, box_a: frozenset, box_b: frozenset):
    row_a, row_b = check_two_row_boxsets(t, box_a, box_b)
    if not row_a < row_b:
        raise ValueError("box set A must lie in an earlier row than B")
    if len(box_a) + len(box_b) <= t.shape[row_a - 1]:
        raise ValueError(
            "invalid dual Garnir label: |A| + |B| must exceed the length of A's row"
        )
    return row_a, row_b


def _relation_from_classes(t, box_a, box_b, classes, ring, kind, snake=None) -> WeylRelation:
    coords = {sort_rows(u): index for u, index in classes}
    lin = LinComb(ZZ, coords)
    if ring != ZZ:
        lin = lin.change_ring(ring)
    return WeylRelation(kind, t, box_a, box_b, SymLowerElement(lin), snake)


@cache
def _dual_garnir_int(t: Tableau, box_a: frozenset, box_b: frozenset) -> LinComb:
    classes = sab_orbit_row_classes(t, box_a, box_b)
    return LinComb(ZZ, {sort_rows(u): index for u, index in classes})


def dual_garnir(
    t: Tableau, box_a: frozenset, box_b: frozenset, ring: CoefficientRing = ZZ
) -> WeylRelation:
    """The index-weighted row-class sum labelled by (t, A, B)."""
    _check_dual_garnir_label(t, box_a, box_b)
    lin = _dual_garnir_int(t, box_a, box_b)
    if ring != ZZ:
        lin = lin.change_ring(ring)
    return WeylRelation(DUAL_GARNIR, t, box_a, box_b, SymLowerElement(lin))


def dual_garnir_double_coset(
    t: Tableau, box_a: frozenset, box_b: frozenset, ring: CoefficientRing = ZZ
) -> WeylRelation:
    """Same element computed from brute-force double coset representatives.

    Oracle path: refuses |A| + |B| > 6.  Must agree with :func:`dual_garnir`.
    """
    _check_dual_garnir_label(t, box_a, box_b)
    members = frozenset(box_a | box_b)
    classes = []
    for rep in double_coset_reps(t, box_a, box_b):
        u = rep.act(t)
        classes.append((u, class_index(u, members)))
    return _relation_from_classes(t, box_a, box_b, classes, ring, DUAL_GARNIR)


def variant_relation(
    t: Tableau,
    box_a: frozenset,
    box_b: frozenset,
    kind: str,
    ring: CoefficientRing = ZZ,
) -> WeylRelation:
    """The two rejected alternatives to the dual Garnir relation.

    "star": one row symmetrisation per left coset representative, no
    weights.  "star_star": full row-group sums instead of symmetrisations,
    i.e. each coset term additionally scaled by its row stabilizer order.
    Neither spans the kernel -- the first fails to lie in it at all, the
    second acquires scalar factors -- but both are useful regression
    targets.
    """
    _check_dual_garnir_label(t, box_a, box_b)
    if kind not in (STAR_VARIANT, STAR_STAR_VARIANT):
        raise ValueError(f"unknown variant kind {kind!r}")
    coords: dict[Tableau, int] = {}
    for u, mult in sab_cosets_star(t, box_a, box_b):
        weight = mult if kind == STAR_VARIANT else mult * row_stabilizer_order(u)
        label = sort_rows(u)
        coords[label] = coords.get(label, 0) + weight
    lin = LinComb(ZZ, coords)
    if ring != ZZ:
        lin = lin.change_ring(ring)
    return WeylRelation(kind, t, box_a, box_b, SymLowerElement(lin))


def snake_boxsets(shape, i: int, j: int, jp: int) -> tuple[frozenset, frozenset]:
    shape = check_partition(shape)
    if not 1 <= i < len(shape):
        raise ValueError("snake row index out of range")
    if not 1 <= j <= shape[i - 1]:
        raise ValueError("snake start column out of range")
    if not 1 <= jp <= shape[i]:
        raise ValueError("snake end column exceeds the lower row")
    if j > jp:
        raise ValueError("snake columns must satisfy j <= j'")
    box_a = frozenset((i, r) for r in range(j, shape[i - 1] + 1))
    box_b = frozenset((i + 1, r) for r in range(1, jp + 1))
    return box_a, box_b


def dual_snake(t: Tableau, i: int, j: int, jp: int, ring: CoefficientRing = ZZ) -> WeylRelation:
    """The adjacent-row relation on a right segment of row i and a left segment of row i+1."""
    box_a, box_b = snake_boxsets(t.shape, i, j, jp)
    rel = dual_garnir(t, box_a, box_b, ring)
    return WeylRelation(DUAL_SNAKE, t, box_a, box_b, rel.element, (i, j, jp))


def snake_labels(shape):
    """All (i, j, j') triples labelling a dual snake relation on the shape."""
    shape = check_partition(shape)
    for i in range(1, len(shape)):
        for jp in range(1, shape[i] + 1):
            for j in range(1, jp + 1):
                yield (i, j, jp)


def dual_garnir_labels(shape):
    """All box-set pairs (A, B) admitting a dual Garnir relation on the shape."""
    shape = check_partition(shape)
    nrows = len(shape)
    for ia in range(1, nrows):
        row_a = [(ia, r) for r in range(1, shape[ia - 1] + 1)]
        for ib in range(ia + 1, nrows + 1):
            row_b = [(ib, r) for r in range(1, shape[ib - 1] + 1)]
            for na in range(1, len(row_a) + 1):
                for nb in range(1, len(row_b) + 1):
                    if na + nb <= shape[ia - 1]:
                        continue
                    for sub_a in combinations(row_a, na):
                        for sub_b in combinations(row_b, nb):
                            yield frozenset(sub_a), frozenset(sub_b)


# ---------------------------------------------------------------------------
# straightening


@dataclass(frozen=True)
class StraighteningCertificate:
    """Result of rewriting an element into semistandard coordinates.

    ``source + sum(coeff * snake element) == coords`` holds exactly as
    symmetric tensors, where the sum runs over ``gamma`` entries
    (tableau, i, j, j', coeff).
    """

    source: SymLowerElement
    coords: SymLowerElement
    gamma: tuple[tuple[Tableau, int, int, int, object], ...]

    def gamma_combination(self) -> SymLowerElement:
        ring = self.source.ring
        out = LinComb.zero(ring)
        for t, i, j, jp, coeff in self.gamma:
            out = out.combine(dual_snake(t, i, j, jp, ring).element.lin, 1, coeff)
        return SymLowerElement(out)

    def residual(self) -> SymLowerElement:
        """source - coords + gamma combination; zero for a valid certificate."""
        lin = self.source.lin.combine(self.coords.lin, 1, -1)
        lin = lin.combine(self.gamma_combination().lin, 1, 1)
        return SymLowerElement(lin)

    def verify(self) -> bool:
        from .powers import sym_lower_expand

        lhs = sym_lower_expand(self.source).lin
        rhs = sym_lower_expand(self.coords).lin
        gam = sym_lower_expand(self.gamma_combination()).lin
        identity = lhs.combine(rhs, 1, -1).combine(gam, 1, 1).is_zero
        return identity and all(s.is_semistandard for s in self.coords.labels())


def _first_violation(t: Tableau):
    """First box (i, j0), rows then columns, whose entry is >= the one below."""
    for i in range(1, len(t.shape)):
        upper, lower = t.rows[i - 1], t.rows[i]
        for j0 in range(1, len(lower) + 1):
            if upper[j0 - 1] >= lower[j0 - 1]:
                return i, j0
    return None


def _snake_for_violation(t: Tableau, i: int, j0: int) -> tuple[int, int]:
    """Segment bounds aligned with the runs of equal entries through (i, j0).

    The start column j walks left while the upper-row value repeats; the end
    column j' walks right while the lower-row value repeats.  This keeps
    every value of a row wholly inside or wholly outside the chosen boxes,
    which forces a unit leading coefficient.
    """
    upper, lower = t.rows[i - 1], t.rows[i]
    j = j0
    while j > 1 and upper[j - 2] == upper[j0 - 1]:
        j -= 1
    jp = j0
    while jp < len(lower) and lower[jp] == lower[j0 - 1]:
        jp += 1
    return j, jp


def straighten(x: SymLowerElement) -> StraighteningCertificate:
    """Rewrite x as semistandard coordinates modulo dual snake relations.

    Repeatedly clears the row-order-greatest label that is not column
    standard by subtracting the matching multiple of the snake relation
    aligned with its first violating box; every label so introduced is
    strictly smaller, so the loop terminates.
    """
    ring = x.ring
    max_entry = max((t.max_entry for t in x.labels()), default=1)
    work = {t: c for t, c in x.lin.items()}
    gamma: list[tuple[Tableau, int, int, int, object]] = []
    heap: list[tuple[tuple, Tableau]] = []
    queued = set()

    def push(label):
        if label not in queued and not label.is_semistandard:
            key = tuple(-v for v in row_order_key(label, max_entry))
            heapq.heappush(heap, (key, label))
            queued.add(label)

    for label in work:
        push(label)

    shape = x.shape
    step_cap = 64
    if shape is not None:
        from .tableaux import count_tableaux

        step_cap = max(64, count_tableaux(shape, max_entry, ROW_SEMISTANDARD) ** 2)

    steps = 0
    while heap:
        _, label = heapq.heappop(heap)
        queued.discard(label)
        coeff = work.get(label, ring.zero)
        if coeff == 0:
            continue
        steps += 1
        if steps > step_cap:
            raise RuntimeError("straightening exceeded its step budget")
        found = _first_violation(label)
        if found is None:  # label is semistandard; cannot happen for queued labels
            continue
        i, j0 = found
        j, jp = _snake_for_violation(label, i, j0)
        snake = dual_snake(label, i, j, jp, ring)
        lead = snake.element.coeff(label)
        if lead != ring.one:
            raise RuntimeError("snake relation lost its unit leading coefficient")
        for u, c in snake.element.lin.items():
            new = ring.sub(work.get(u, ring.zero), ring.mul(coeff, c))
            if new == 0:
                work.pop(u, None)
            else:
                work[u] = new
                push(u)
        gamma.append((label, i, j, jp, ring.neg(coeff)))

    coords = SymLowerElement(LinComb(ring, work))
    return StraighteningCertificate(x, coords, tuple(gamma))


# ---------------------------------------------------------------------------
# bases and verification


def weyl_basis(shape, max_entry: int, ring: CoefficientRing = ZZ):
    """The semistandard copolytabloids, paired with their labels."""
    return [
        (s, copolytabloid(s, ring)) for s in enumerate_tableaux(shape, max_entry, SEMISTANDARD)
    ]


def verify_weyl_kernel(
    shape,
    max_entry: int,
    ring: CoefficientRing,
    size_cap: int | None = 5,
    entry_cap: int | None = 3,
) -> dict:
    """Check that the dual snake relations are exactly the wedge projection kernel.

    Computes the rank of the projection restricted to symmetric tensors (in
    the row-symmetrised / column-standard bases), checks it equals the
    semistandard count, checks every snake relation projects to zero, and
    checks the snake span has rank equal to the nullity.  Over the integers
    the ranks are rational and the snake matrix must additionally have unit
    elementary divisors.
    """
    shape = check_partition(shape)
    _check_caps(shape, max_entry, size_cap, entry_cap)
    if not (ring.is_field or ring.kind == "z"):
        raise ValueError("verification needs a field or the integers")
    rank_ring = ring if ring.is_field else CoefficientRing.rationals()
    started = time.perf_counter()

    rssyt = enumerate_tableaux(shape, max_entry, ROW_SEMISTANDARD)
    ssyt = enumerate_tableaux(shape, max_entry, SEMISTANDARD)
    csyt = enumerate_tableaux(shape, max_entry, COLUMN_STANDARD)
    rssyt_index = {t: i for i, t in enumerate(rssyt)}
    csyt_index = {t: i for i, t in enumerate(csyt)}

    proj_rows = []
    for t in rssyt:
        el = copolytabloid(t, ring if ring.is_field else ZZ)
        proj_rows.append({csyt_index[l]: c for l, c in el.items()})
    rank_projection = rank_of_rows(proj_rows, rank_ring)

    checks = [
        {
            "name": "projection_rank_is_ssyt_count",
            "ok": rank_projection == len(ssyt),
            "counterexample": None,
        }
    ]

    snake_rows = []
    snake_int_rows = []
    bad = None
    for t in rssyt:
        for i, j, jp in snake_labels(shape):
            rel = dual_snake(t, i, j, jp, ring if ring.is_field else ZZ)
            if not wedge_of_sym_lower(rel.element).is_zero:
                bad = rel
                break
            snake_rows.append({rssyt_index[l]: c for l, c in rel.element.items()})
            if ring.kind == "z":
                snake_int_rows.append(snake_rows[-1])
        if bad:
            break
    counterexample = None
    if bad is not None:
        counterexample = {
            "label": bad.label_json(),
            "element": bad.element.to_json(),
        }
    checks.append(
        {"name": "snakes_lie_in_kernel", "ok": bad is None, "counterexample": counterexample}
    )

    expected_nullity = len(rssyt) - len(ssyt)
    rank_snakes = rank_of_rows(snake_rows, rank_ring) if bad is None else None
    if bad is None:
        checks.append(
            {
                "name": "snake_span_rank_is_nullity",
                "ok": rank_snakes == expected_nullity,
                "counterexample": None,
            }
        )
    ranks = {
        "projection": rank_projection,
        "snake_span": rank_snakes,
        "expected_nullity": expected_nullity,
    }
    if ring.kind == "z" and bad is None:
        divisors = smith_elementary_divisors(snake_int_rows, len(rssyt))
        ranks["snake_elementary_divisors"] = divisors
        checks.append(
            {
                "name": "snake_lattice_is_direct_summand",
                "ok": all(d == 1 for d in divisors) and len(divisors) == expected_nullity,
                "counterexample": None,
            }
        )

    return {
        "command": "weyl-verify",
        "instance": {"shape": list(shape), "entries": max_entry, "ring": ring.tag},
        "dims": {"rssyt": len(rssyt), "ssyt": len(ssyt), "csyt": len(csyt)},
        "ranks": ranks,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
        "wall_time_s": round(time.perf_counter() - started, 6),
    }

"""Place permutations of a Young diagram and the orbit machinery they drive.

Permutations act on boxes on the right; a tableau entry at box b moves to
box b.sigma.  Sums over cosets of row groups are never computed by listing
group elements: they are replaced by enumeration of distinct tableaux
(orbits) together with closed-form stabilizer orders, which the two-row
relation constructors below rely on.  A brute-force positional double-coset
enumerator is kept as an oracle for small box sets.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations, product
from math import factorial

from .tableaux import Tableau, check_partition, diagram_boxes, sort_rows


def permutation_parity(images) -> int:
    """Sign of the permutation i -> images[i] of range(len(images))."""
    n = len(images)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def multiset_permutations(items):
    """Distinct permutations of a multiset, in lexicographic order."""
    seq = sorted(items)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


@cache
def _box_index(shape) -> dict[tuple[int, int], int]:
    return {b: i for i, b in enumerate(diagram_boxes(shape))}


class PlacePermutation:
    """A bijection of the boxes of one Young diagram."""

    __slots__ = ("shape", "images")

    def __init__(self, shape, mapping: dict | None = None):
        self.shape = check_partition(shape)
        boxes = diagram_boxes(self.shape)
        if mapping is None:
            self.images = boxes
            return
        box_set = set(boxes)
        for src, dst in mapping.items():
            if src not in box_set or dst not in box_set:
                raise ValueError(f"box {src} -> {dst} outside the diagram of {self.shape}")
        images = tuple(mapping.get(b, b) for b in boxes)
        if len(set(images)) != len(images):
            raise ValueError("mapping is not a bijection of the diagram")
        self.images = images

    @classmethod
    def _from_images(cls, shape, images) -> "PlacePermutation":
        self = object.__new__(cls)
        self.shape = shape
        self.images = images
        return self

    @classmethod
    def identity(cls, shape) -> "PlacePermutation":
        return cls(shape)

    @classmethod
    def transposition(cls, shape, a, b) -> "PlacePermutation":
        return cls(shape, {a: b, b: a})

    @property
    def mapping(self) -> dict[tuple[int, int], tuple[int, int]]:
        return dict(zip(diagram_boxes(self.shape), self.images))

    @property
    def sign(self) -> int:
        index = _box_index(self.shape)
        return permutation_parity([index[b] for b in self.images])

    def then(self, other: "PlacePermutation") -> "PlacePermutation":
        """Composite: apply self first, then other."""
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        index = _box_index(self.shape)
        images = tuple(other.images[index[b]] for b in self.images)
        return PlacePermutation._from_images(self.shape, images)

    def inverse(self) -> "PlacePermutation":
        boxes = diagram_boxes(self.shape)
        inv = {dst: src for src, dst in zip(boxes, self.images)}
        return PlacePermutation._from_images(self.shape, tuple(inv[b] for b in boxes))

    def act(self, t: Tableau) -> Tableau:
        """Right action: the entry in box b moves to box b.self."""
        if t.shape != self.shape:
            raise ValueError("shape mismatch")
        grid = [[0] * k for k in self.shape]
        boxes = diagram_boxes(self.shape)
        for (i, j), (ni, nj) in zip(boxes, self.images):
            grid[ni - 1][nj - 1] = t.rows[i - 1][j - 1]
        return Tableau._fresh(tuple(tuple(r) for r in grid))

    def __eq__(self, other):
        return (
            isinstance(other, PlacePermutation)
            and self.shape == other.shape
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.shape, self.images))

    def __repr__(self):
        moved = {s: d for s, d in self.mapping.items() if s != d}
        return f"PlacePermutation({self.shape}, {moved})"


def act(t: Tableau, sigma: PlacePermutation) -> Tableau:
    return sigma.act(t)


def all_place_permutations(shape):
    """Every bijection of the diagram (factorially many; test scale only)."""
    shape = check_partition(shape)
    boxes = diagram_boxes(shape)
    for images in permutations(boxes):
        yield PlacePermutation._from_images(shape, images)


def _per_line_permutations(lines, shape):
    """Place permutations that independently permute each given set of boxes."""
    per_line = [list(permutations(line)) for line in lines]
    for images_by_line in product(*per_line):
        mapping = {}
        for line, images in zip(lines, images_by_line):
            mapping.update(zip(line, images))
        yield PlacePermutation(shape, mapping)


def row_preserving_permutations(shape):
    shape = check_partition(shape)
    rows = [tuple((i, j) for j in range(1, k + 1)) for i, k in enumerate(shape, 1)]
    yield from _per_line_permutations(rows, shape)


def column_preserving_permutations(shape):
    shape = check_partition(shape)
    ncols = shape[0] if shape else 0
    cols = [
        tuple((i, j) for i in range(1, len(shape) + 1) if shape[i - 1] >= j)
        for j in range(1, ncols + 1)
    ]
    yield from _per_line_permutations(cols, shape)


# ---------------------------------------------------------------------------
# row orbits and stabilizer orders


@cache
def _row_orbit_of_sorted(t: Tableau) -> tuple[Tableau, ...]:
    per_row = [tuple(multiset_permutations(row)) for row in t.rows]
    return tuple(Tableau._fresh(rows) for rows in product(*per_row))


def row_orbit(t: Tableau) -> tuple[Tableau, ...]:
    """The distinct tableaux obtained by permuting each row of t independently."""
    return _row_orbit_of_sorted(sort_rows(t))


def row_stabilizer_order(t: Tableau) -> int:
    """Order of the row-preserving stabilizer: per row, one factorial per repeated value."""
    order = 1
    for row in t.rows:
        counts: dict[int, int] = {}
        for v in row:
            counts[v] = counts.get(v, 0) + 1
        for c in counts.values():
            order *= factorial(c)
    return order


def _split_row_stabilizer_order(t: Tableau, members: frozenset) -> int:
    """Order of the row stabilizer of t intersected with the box-set split.

    Counts the row-preserving permutations fixing t that also preserve the
    set ``members`` (and its complement): within each row the positions of
    any one value must lie wholly inside or wholly outside ``members`` to be
    swapped, so the order is a product of factorials of per-side counts.
    """
    order = 1
    for i, row in enumerate(t.rows, 1):
        inside: dict[int, int] = {}
        outside: dict[int, int] = {}
        for j, v in enumerate(row, 1):
            side = inside if (i, j) in members else outside
            side[v] = side.get(v, 0) + 1
        for c in inside.values():
            order *= factorial(c)
        for c in outside.values():
            order *= factorial(c)
    return order


def class_index(t: Tableau, members: frozenset) -> int:
    """Index of the split row stabilizer inside the full row stabilizer of t."""
    return row_stabilizer_order(t) // _split_row_stabilizer_order(t, members)


# ---------------------------------------------------------------------------
# two-row box-set sums


def _box_row(box) -> int:
    return box[0]


def check_two_row_boxsets(t: Tableau, box_a: frozenset, box_b: frozenset, allow_empty_b=False):
    """Validate that A and B are disjoint and each inside a single row of t."""
    boxes = set(diagram_boxes(t.shape))
    for name, s in (("A", box_a), ("B", box_b)):
        if not s <= boxes:
            raise ValueError(f"box set {name} lies outside the diagram of {t.shape}")
    if box_a & box_b:
        raise ValueError("box sets A and B must be disjoint")
    if not box_a:
        raise ValueError("box set A must be nonempty")
    if not box_b and not allow_empty_b:
        raise ValueError("box set B must be nonempty")
    rows_a = {_box_row(b) for b in box_a}
    rows_b = {_box_row(b) for b in box_b}
    if len(rows_a) != 1 or len(rows_b) > 1:
        raise ValueError("each box set must lie within a single row")
    if box_b and rows_a == rows_b:
        raise ValueError("box sets A and B must lie in different rows")
    return min(rows_a), min(rows_b) if box_b else None


def _fill_boxes(t: Tableau, boxes, values) -> Tableau:
    grid = [list(r) for r in t.rows]
    for (i, j), v in zip(boxes, values):
        grid[i - 1][j - 1] = v
    return Tableau._fresh(tuple(tuple(r) for r in grid))


def sab_orbit_row_classes(
    t: Tableau, box_a: frozenset, box_b: frozenset, rep_choice: str = "min"
) -> list[tuple[Tableau, int]]:
    """Row classes of the tableaux reachable by permuting the boxes of A | B.

    Enumerates the distinct tableaux obtained by rearranging the entries of
    t on A | B, groups them by row equivalence, and returns one
    representative per class (drawn from the reachable set) together with
    the index of its split row stabilizer inside its full row stabilizer.
    """
    check_two_row_boxsets(t, box_a, box_b)
    if rep_choice not in ("min", "max"):
        raise ValueError("rep_choice must be 'min' or 'max'")
    union = tuple(sorted(box_a | box_b))
    members = frozenset(union)
    entries = [t.entry(i, j) for i, j in union]
    classes: dict[Tableau, list[Tableau]] = {}
    for arrangement in multiset_permutations(entries):
        u = _fill_boxes(t, union, arrangement)
        classes.setdefault(sort_rows(u), []).append(u)
    pick = min if rep_choice == "min" else max
    out = []
    for canon in sorted(classes, key=lambda s: s.sort_key):
        rep = pick(classes[canon], key=lambda s: s.sort_key)
        out.append((rep, class_index(rep, members)))
    return out


def sab_cosets_star(t: Tableau, box_a: frozenset, box_b: frozenset) -> list[tuple[Tableau, int]]:
    """Multiset of tableaux reached by one representative per left coset.

    Representatives of the left cosets of the A-and-B-preserving subgroup
    are indexed by which boxes of A | B flow into A; each acts on t, and
    identical result tableaux are tallied with multiplicities.
    """
    check_two_row_boxsets(t, box_a, box_b, allow_empty_b=True)
    tally: dict[Tableau, int] = {}
    for rep in left_coset_reps(t.shape, box_a, box_b):
        u = rep.act(t)
        tally[u] = tally.get(u, 0) + 1
    return sorted(tally.items(), key=lambda kv: kv[0].sort_key)


def left_coset_reps(shape, box_a: frozenset, box_b: frozenset):
    """One representative per left coset of S_A x S_B in S_{A|B}.

    Cosets correspond to the subsets of A | B flowing into A; the chosen
    representative maps that subset and its complement order-preservingly.
    """
    union = tuple(sorted(box_a | box_b))
    a_sorted = tuple(sorted(box_a))
    b_sorted = tuple(sorted(box_b))
    from itertools import combinations

    reps = []
    for chosen in combinations(union, len(a_sorted)):
        rest = tuple(b for b in union if b not in set(chosen))
        mapping = dict(zip(chosen, a_sorted))
        mapping.update(zip(rest, b_sorted))
        reps.append(PlacePermutation(shape, mapping))
    return reps


# ---------------------------------------------------------------------------
# brute-force double cosets (oracle path)


@cache
def _positional_double_coset_reps(
    k: int, a_positions: frozenset, pattern: tuple[int, ...]
) -> tuple[tuple[int, ...], ...]:
    """Min representatives of the double cosets stab(pattern) \\ S_k / S_A x S_B.

    Everything is positional: permutations p of range(k) send the value at
    position i to position p[i]; ``pattern`` is the tuple of entry classes
    and ``a_positions`` the positions forming A.
    """
    perms = list(permutations(range(k)))

    def act_pattern(p):
        out = [0] * k
        for i, v in enumerate(pattern):
            out[p[i]] = v
        return tuple(out)

    def mul(p, q):  # apply p, then q
        return tuple(q[p[i]] for i in range(k))

    stab = [p for p in perms if act_pattern(p) == pattern]
    side = [p for p in perms if all((p[i] in a_positions) == (i in a_positions) for i in range(k))]
    remaining = set(perms)
    reps = []
    while remaining:
        g = min(remaining)
        coset = {mul(mul(h, g), s) for h in stab for s in side}
        reps.append(min(coset))
        remaining -= coset
    return tuple(sorted(reps))


def double_coset_reps(t: Tableau, box_a: frozenset, box_b: frozenset) -> list[PlacePermutation]:
    """Brute-force double coset representatives for the two-row label (t, A, B).

    Refuses box sets with more than six boxes; this path exists to validate
    the orbit construction, not to compute with.
    """
    check_two_row_boxsets(t, box_a, box_b)
    union = tuple(sorted(box_a | box_b))
    k = len(union)
    if k > 6:
        raise ValueError("double-coset oracle refuses |A| + |B| > 6")
    entries = [t.entry(i, j) for i, j in union]
    ids = {v: n for n, v in enumerate(sorted(set(entries)))}
    pattern = tuple(ids[v] for v in entries)
    a_positions = frozenset(n for n, b in enumerate(union) if b in box_a)
    reps = _positional_double_coset_reps(k, a_positions, pattern)
    out = []
    for p in reps:
        mapping = {union[i]: union[p[i]] for i in range(k)}
        out.append(PlacePermutation(t.shape, mapping))
    return out


def boxset_to_json(boxes: frozenset) -> dict:
    return {"boxes": [list(b) for b in sorted(boxes)]}


def boxset_from_json(obj) -> frozenset:
    pairs = obj["boxes"] if isinstance(obj, dict) else obj
    out = set()
    for pair in pairs:
        i, j = pair
        out.add((int(i), int(j)))
    return frozenset(out)

import random
from itertools import permutations as iperms

import pytest

from weylkit.coeffs import QQ, ZZ, LinComb, integers_mod
from weylkit.places import PlacePermutation, column_preserving_permutations
from weylkit.powers import ColumnTabloidElement, RowTabloidElement
from weylkit.schur import (
    SizeCapExceeded,
    apply_polytabloid_map,
    garnir,
    garnir_labels,
    polytabloid,
    verify_schur_ses,
)
from weylkit.tableaux import ALL, Tableau, enumerate_tableaux, partitions_up_to, sort_columns, sort_rows

T = Tableau


def brute_polytabloid(t):
    """Oracle: literal signed sum over the whole column-preserving group."""
    terms = {}
    for sigma in column_preserving_permutations(t.shape):
        label = sort_rows(sigma.act(t))
        terms[label] = terms.get(label, 0) + sigma.sign
    return RowTabloidElement(LinComb(ZZ, terms))


class TestPolytabloid:
    def test_hook_example(self):
        got = polytabloid(T([[1, 2], [2]]))
        assert got == RowTabloidElement(
            LinComb(ZZ, {T([[1, 2], [2]]): 1, T([[2, 2], [1]]): -1})
        )

    def test_repeated_column_entry_gives_zero(self):
        assert polytabloid(T([[1, 2], [1, 3]])).is_zero
        assert polytabloid(T([[1, 1], [1, 1]])).is_zero

    def test_column_permutation_changes_sign(self):
        rng = random.Random(5)
        for shape, m in [((2, 2), 3), ((2, 1), 3), ((2, 2, 1), 2)]:
            tabs = enumerate_tableaux(shape, m, ALL)
            sigmas = list(column_preserving_permutations(shape))
            for _ in range(10):
                t = rng.choice(tabs)
                sigma = rng.choice(sigmas)
                assert polytabloid(sigma.act(t)) == polytabloid(t).scaled(sigma.sign)

    def test_matches_group_sum_oracle(self):
        for shape, m in [((2, 1), 2), ((2, 2), 2), ((3, 1), 2)]:
            for t in enumerate_tableaux(shape, m, ALL):
                assert polytabloid(t) == brute_polytabloid(t)

    def test_map_is_well_defined_on_signed_classes(self):
        # transposing one column flips the sign of the polytabloid
        t = T([[1, 2], [3, 4]])
        swapped = PlacePermutation.transposition(t.shape, (1, 1), (2, 1)).act(t)
        assert polytabloid(swapped) == polytabloid(t).scaled(-1)


class TestGarnir:
    A = frozenset({(1, 1), (2, 1)})
    B = frozenset({(1, 2)})

    def brute_garnir(self, t, box_a, box_b):
        """Oracle: enumerate the box-set group, split into left cosets, sum reps."""
        union = tuple(sorted(box_a | box_b))
        k = len(union)
        elements = []
        for images in iperms(union):
            elements.append(PlacePermutation(t.shape, dict(zip(union, images))))
        subgroup = [
            s
            for s in elements
            if all((dst in box_a) == (src in box_a) for src, dst in s.mapping.items())
        ]
        seen = set()
        terms = {}
        for tau in elements:
            coset = frozenset(tau.then(k2).images for k2 in subgroup)
            if coset in seen:
                continue
            seen.add(coset)
            sorted_ = sort_columns(tau.act(t))
            if sorted_ is None:
                continue
            sign, w = sorted_
            terms[w] = terms.get(w, 0) + tau.sign * sign
        return ColumnTabloidElement(LinComb(ZZ, terms))

    def test_square_example_three_terms_killed_by_map(self):
        t = T([[1, 2], [3, 4]])
        rel = garnir(t, self.A, self.B)
        assert len(rel.element.lin) == 3
        assert rel.element == self.brute_garnir(t, self.A, self.B)
        assert apply_polytabloid_map(rel.element).is_zero

    def test_relations_land_in_kernel_small_sweep(self):
        for shape in partitions_up_to(4):
            for m in (1, 2):
                for t in enumerate_tableaux(shape, m, ALL):
                    for box_a, box_b in garnir_labels(shape):
                        rel = garnir(t, box_a, box_b)
                        assert apply_polytabloid_map(rel.element).is_zero

    def test_matches_brute_force_on_square(self):
        for t in enumerate_tableaux((2, 2), 2, ALL):
            rel = garnir(t, self.A, self.B)
            assert rel.element == self.brute_garnir(t, self.A, self.B)

    def test_constant_tableau_relation_vanishes(self):
        rel = garnir(T([[1, 1], [1, 1]]), self.A, self.B)
        assert rel.element.is_zero

    def test_label_validation(self):
        t = T([[1, 2], [3, 4]])
        with pytest.raises(ValueError, match="exceed"):
            garnir(t, frozenset({(1, 1)}), frozenset({(1, 2)}))
        with pytest.raises(ValueError, match="earlier column"):
            garnir(t, frozenset({(1, 2), (2, 2)}), frozenset({(1, 1)}))
        with pytest.raises(ValueError, match="single column"):
            garnir(t, frozenset({(1, 1), (1, 2)}), frozenset({(2, 2)}))

    def test_label_sweep_counts(self):
        # (2, 2): columns of length 2; subsets with |A| + |B| > 2
        labels = list(garnir_labels((2, 2)))
        assert len(labels) == 5
        assert all(len(a) + len(b) > 2 for a, b in labels)


class TestVerify:
    def test_hook_over_rationals(self):
        report = verify_schur_ses((2, 1), 2, QQ)
        assert report["ok"]
        assert report["dims"] == {"csyt": 2, "ssyt": 2, "wedge_dim": 2}
        assert report["ranks"]["polytabloid_map"] == 2
        assert report["ranks"]["garnir_span"] == 0

    def test_single_box_is_injective(self):
        report = verify_schur_ses((1,), 3, QQ)
        assert report["ok"]
        assert report["ranks"]["polytabloid_map"] == 3
        assert report["ranks"]["garnir_span"] == 0

    def test_square_mod_two(self):
        report = verify_schur_ses((2, 2), 2, integers_mod(2))
        assert report["ok"]
        assert report["ranks"]["polytabloid_map"] + report["ranks"]["garnir_span"] == report["dims"]["csyt"]

    def test_integer_ring_adds_divisor_certificate(self):
        report = verify_schur_ses((2, 2), 2, ZZ)
        assert report["ok"]
        assert all(d == 1 for d in report["ranks"]["garnir_elementary_divisors"])

    def test_relation_lattice_unit_divisors_sweep(self):
        for shape in partitions_up_to(4):
            for m in (1, 2):
                report = verify_schur_ses(shape, m, ZZ)
                assert report["ok"], (shape, m)
                divisors = report["ranks"]["garnir_elementary_divisors"]
                assert all(d == 1 for d in divisors)

    def test_caps(self):
        with pytest.raises(SizeCapExceeded):
            verify_schur_ses((4, 2), 2, QQ, size_cap=5)
        with pytest.raises(SizeCapExceeded):
            verify_schur_ses((2, 1), 9, QQ)

    def test_rejects_non_field_modulus(self):
        with pytest.raises(ValueError):
            verify_schur_ses((2, 1), 2, integers_mod(4))

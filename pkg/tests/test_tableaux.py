import pytest

from weylkit.tableaux import (
    ALL,
    COLUMN_STANDARD,
    ROW_SEMISTANDARD,
    SEMISTANDARD,
    OrderVerdict,
    Tableau,
    check_partition,
    column_order_key,
    compare_columns,
    compare_rows,
    conjugate,
    count_tableaux,
    diagram_boxes,
    enumerate_tableaux,
    partitions_up_to,
    row_order_key,
    sort_columns,
    sort_rows,
)

T = Tableau


class TestPartitions:
    def test_validation(self):
        assert check_partition((3, 2, 2)) == (3, 2, 2)
        with pytest.raises(ValueError):
            check_partition((2, 3))
        with pytest.raises(ValueError):
            check_partition((2, 0))

    def test_conjugate_examples(self):
        assert conjugate((3, 2)) == (2, 2, 1)
        assert conjugate((4,)) == (1, 1, 1, 1)
        assert conjugate(()) == ()

    def test_conjugate_is_involutive_up_to_8(self):
        for shape in partitions_up_to(8):
            assert conjugate(conjugate(shape)) == shape

    def test_conjugate_against_grid_transpose(self):
        # independent oracle: transpose the boolean diagram
        for shape in partitions_up_to(6):
            boxes = set(diagram_boxes(shape))
            transposed = {(j, i) for i, j in boxes}
            expect = []
            i = 1
            while (i, 1) in transposed:
                expect.append(max(j for a, j in transposed if a == i))
                i += 1
            assert conjugate(shape) == tuple(expect)

    def test_diagram_boxes(self):
        assert diagram_boxes((2, 1)) == ((1, 1), (1, 2), (2, 1))


class TestTableau:
    def test_shape_and_entries(self):
        t = T([[1, 2, 2], [3, 3]])
        assert t.shape == (3, 2)
        assert t.entry(2, 1) == 3
        assert t.reading_word == (1, 2, 2, 3, 3)
        assert t.column_entries(1) == (1, 3)
        assert t.column_entries(3) == (2,)

    def test_validation(self):
        with pytest.raises(ValueError):
            T([[1], [2, 3]])
        with pytest.raises(ValueError):
            T([[0, 1]])

    def test_predicates(self):
        assert T([[1, 2, 2], [3, 3]]).is_semistandard
        assert T([[2, 1], [3, 3]]).is_column_standard
        assert not T([[2, 1], [3, 3]]).is_row_semistandard
        assert not T([[1, 2], [1, 3]]).is_column_standard

    def test_json_round_trip(self):
        t = T([[1, 2, 2], [3, 3]])
        assert Tableau.from_json(t.to_json()) == t
        assert Tableau.from_json([[1, 2], [2, 2]]) == T([[1, 2], [2, 2]])
        with pytest.raises(ValueError):
            Tableau.from_json({"shape": [2, 2], "rows": [[1, 2], [3]]})

    def test_immutability(self):
        t = T([[1]])
        with pytest.raises(AttributeError):
            t.rows = ((2,),)


class TestEnumeration:
    def brute(self, shape, m, predicate):
        return [t for t in enumerate_tableaux(shape, m, ALL) if predicate(t)]

    def test_semistandard_2x2_alphabet_2(self):
        expect = self.brute((2, 2), 2, lambda t: t.is_semistandard)
        got = enumerate_tableaux((2, 2), 2, SEMISTANDARD)
        assert list(got) == expect == [T([[1, 1], [2, 2]])]

    def test_semistandard_hook_alphabet_2(self):
        expect = self.brute((2, 1), 2, lambda t: t.is_semistandard)
        got = enumerate_tableaux((2, 1), 2, SEMISTANDARD)
        assert list(got) == expect == [T([[1, 1], [2]]), T([[1, 2], [2]])]

    def test_column_standard_needs_enough_entries(self):
        assert enumerate_tableaux((1, 1, 1), 2, COLUMN_STANDARD) == ()

    def test_every_class_matches_brute_force(self):
        cases = [((2, 1), 2), ((2, 2), 2), ((3, 1), 2), ((2, 1), 3), ((1, 1, 1), 3)]
        predicates = {
            ROW_SEMISTANDARD: lambda t: t.is_row_semistandard,
            COLUMN_STANDARD: lambda t: t.is_column_standard,
            SEMISTANDARD: lambda t: t.is_semistandard,
        }
        for shape, m in cases:
            for kind, pred in predicates.items():
                assert list(enumerate_tableaux(shape, m, kind)) == self.brute(shape, m, pred)

    def test_sorted_and_duplicate_free(self):
        for kind in (ALL, ROW_SEMISTANDARD, COLUMN_STANDARD, SEMISTANDARD):
            tabs = enumerate_tableaux((2, 2, 1), 3, kind)
            words = [t.reading_word for t in tabs]
            assert words == sorted(words)
            assert len(set(tabs)) == len(tabs)

    def test_counts_match_enumeration(self):
        for shape, m in [((2, 1), 3), ((2, 2), 2), ((3, 2), 2), ((1, 1, 1), 3)]:
            for kind in (ALL, ROW_SEMISTANDARD, COLUMN_STANDARD, SEMISTANDARD):
                assert count_tableaux(shape, m, kind) == len(enumerate_tableaux(shape, m, kind))


class TestOrders:
    def test_equal_tableaux_are_incomparable(self):
        t = T([[1, 2], [2, 2]])
        assert compare_columns(t, t) is OrderVerdict.INCOMPARABLE
        assert compare_rows(t, t) is OrderVerdict.INCOMPARABLE

    def test_equal_column_contents_are_incomparable(self):
        t, u = T([[1, 1], [2, 2]]), T([[2, 1], [1, 2]])
        assert compare_columns(t, u) is OrderVerdict.INCOMPARABLE

    def test_single_row_example(self):
        t, u = T([[1, 2]]), T([[2, 1]])
        assert compare_columns(t, u) is OrderVerdict.LESS
        assert compare_columns(u, t) is OrderVerdict.GREATER

    def test_equal_row_contents_are_incomparable(self):
        t, u = T([[2, 1], [1, 2]]), T([[1, 2], [1, 2]])
        assert compare_rows(t, u) is OrderVerdict.INCOMPARABLE

    def test_higher_large_entry_is_row_greater(self):
        t, u = T([[1], [2]]), T([[2], [1]])
        assert compare_rows(t, u) is OrderVerdict.LESS
        assert compare_rows(u, t) is OrderVerdict.GREATER

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="shape mismatch"):
            compare_columns(T([[1, 2]]), T([[1], [2]]))

    def test_trichotomy_exhaustive(self):
        for shape, m in [((2, 1), 3), ((2, 2), 2), ((3, 1), 2)]:
            tabs = enumerate_tableaux(shape, m, ALL)
            for t in tabs:
                for u in tabs:
                    cc, rc = compare_columns(t, u), compare_rows(t, u)
                    flip = {
                        OrderVerdict.LESS: OrderVerdict.GREATER,
                        OrderVerdict.GREATER: OrderVerdict.LESS,
                        OrderVerdict.INCOMPARABLE: OrderVerdict.INCOMPARABLE,
                    }
                    assert compare_columns(u, t) is flip[cc]
                    assert compare_rows(u, t) is flip[rc]

    def test_incomparable_means_equal_contents(self):
        tabs = enumerate_tableaux((2, 2), 2, ALL)
        for t in tabs:
            for u in tabs:
                cols_equal = all(
                    sorted(t.column_entries(j)) == sorted(u.column_entries(j)) for j in (1, 2)
                )
                assert (compare_columns(t, u) is OrderVerdict.INCOMPARABLE) == cols_equal

    def test_sort_keys_agree_with_comparisons(self):
        for shape, m in [((2, 1), 3), ((2, 2), 2)]:
            tabs = enumerate_tableaux(shape, m, ALL)
            for t in tabs:
                for u in tabs:
                    rk = row_order_key(t, m), row_order_key(u, m)
                    ck = column_order_key(t, m), column_order_key(u, m)
                    assert (compare_rows(t, u) is OrderVerdict.LESS) == (rk[0] < rk[1])
                    assert (compare_rows(t, u) is OrderVerdict.INCOMPARABLE) == (rk[0] == rk[1])
                    assert (compare_columns(t, u) is OrderVerdict.LESS) == (ck[0] < ck[1])
                    assert (compare_columns(t, u) is OrderVerdict.INCOMPARABLE) == (ck[0] == ck[1])


class TestSorting:
    def test_sort_rows(self):
        assert sort_rows(T([[2, 1], [1, 2]])) == T([[1, 2], [1, 2]])
        t = T([[1, 2, 2], [3, 3]])
        assert sort_rows(t) == t
        col = T([[2], [1]])
        assert sort_rows(col) == col

    def test_sort_rows_idempotent_and_constant_on_row_classes(self):
        for t in enumerate_tableaux((2, 2), 2, ALL):
            s = sort_rows(t)
            assert sort_rows(s) == s
            assert s.is_row_semistandard
            assert compare_rows(s, t) is OrderVerdict.INCOMPARABLE

    def test_sort_columns_sign_against_brute_force(self):
        from weylkit.places import column_preserving_permutations

        t = T([[2, 1], [1, 2]])
        matches = []
        for sigma in column_preserving_permutations(t.shape):
            u = sigma.act(t)
            if u.is_column_standard:
                matches.append((sigma.sign, u))
        assert len({u for _, u in matches}) == 1
        assert sort_columns(t) == matches[0] == (-1, T([[1, 1], [2, 2]]))

    def test_sort_columns_zero_on_repeats(self):
        assert sort_columns(T([[1, 2], [1, 3]])) is None

    def test_sort_columns_fixes_column_standard(self):
        t = T([[1, 2], [2, 3]])
        assert sort_columns(t) == (1, t)

    def test_sort_columns_zero_iff_column_repeat(self):
        for t in enumerate_tableaux((2, 2), 3, ALL):
            has_repeat = any(
                len(set(t.column_entries(j))) != len(t.column_entries(j)) for j in (1, 2)
            )
            assert (sort_columns(t) is None) == has_repeat

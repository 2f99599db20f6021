from fractions import Fraction

import pytest

from weylkit.coeffs import QQ, ZZ, integers_mod
from weylkit.linalg import rank_of_rows, smith_elementary_divisors, solve_exact


class TestRank:
    def test_rank_over_rationals(self):
        rows = [{0: 1, 1: 1}, {0: 1, 1: 1}, {0: 2, 1: 2}]
        assert rank_of_rows(rows, QQ) == 1
        rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
        assert rank_of_rows(rows, QQ) == 2

    def test_rank_depends_on_characteristic(self):
        rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
        assert rank_of_rows(rows, integers_mod(2)) == 1
        assert rank_of_rows(rows, integers_mod(3)) == 2

    def test_empty_and_zero_rows(self):
        assert rank_of_rows([], QQ) == 0
        assert rank_of_rows([{}, {0: 0}], QQ) == 0

    def test_requires_field(self):
        with pytest.raises(ValueError):
            rank_of_rows([{0: 1}], ZZ)
        with pytest.raises(ValueError):
            rank_of_rows([{0: 1}], integers_mod(4))

    def test_fraction_entries(self):
        rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}]
        assert rank_of_rows(rows, QQ) == 1


class TestSmith:
    def test_diagonal_normalization(self):
        assert smith_elementary_divisors([{0: 2}, {1: 3}], 2) == [1, 6]

    def test_rank_deficient(self):
        assert smith_elementary_divisors([{0: 2, 1: 4}, {0: 4, 1: 8}], 2) == [2]

    def test_identity(self):
        assert smith_elementary_divisors([{0: 1}, {1: 1}], 2) == [1, 1]

    def test_empty(self):
        assert smith_elementary_divisors([], 3) == []
        assert smith_elementary_divisors([{}], 3) == []

    def test_divisibility_chain(self):
        rows = [{0: 4, 1: 0}, {0: 0, 1: 6}]
        divisors = smith_elementary_divisors(rows, 2)
        assert divisors == [2, 12]
        for a, b in zip(divisors, divisors[1:]):
            assert b % a == 0

    def test_matches_known_lattice(self):
        # rows span an index-5 sublattice of Z^2
        rows = [{0: 1, 1: 2}, {0: 2, 1: -1}]
        assert smith_elementary_divisors(rows, 2) == [1, 5]


class TestSolve:
    def test_unique_solution(self):
        columns = [{"a": 1, "b": 0}, {"a": 1, "b": 1}]
        target = {"a": 3, "b": 2}
        assert solve_exact(columns, target) == [Fraction(1), Fraction(2)]

    def test_inconsistent(self):
        columns = [{"a": 1, "b": 1}]
        target = {"a": 1, "b": 2}
        assert solve_exact(columns, target) is None

    def test_rational_coefficients(self):
        columns = [{"a": 2}]
        target = {"a": 1}
        assert solve_exact(columns, target) == [Fraction(1, 2)]

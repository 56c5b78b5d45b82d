"""Tests for linear algebra over F_p."""

import numpy as np
import pytest

from siltlab.algebra.field import (
    FieldElement,
    independent_rows,
    integer_determinant,
    inverse_matrix,
    kernel_basis,
    left_inverse,
    rank,
    rref,
    solve,
)


class TestFieldElement:
    """Tests for residue arithmetic."""

    def test_reduces_on_construction(self):
        """Test that values are stored as residues."""
        assert FieldElement(-1, 5).value == 4
        assert FieldElement(12, 5).value == 2

    def test_arithmetic(self):
        """Test that +, - and * wrap modulo p."""
        a, b = FieldElement(3, 5), FieldElement(4, 5)
        assert (a + b).value == 2
        assert (a - b).value == 4
        assert (a * b).value == 2
        assert (-a).value == 2

    def test_inverse(self):
        """Test that every nonzero residue has an inverse."""
        for x in range(1, 7):
            assert (FieldElement(x, 7) * FieldElement(x, 7).inverse()).value == 1

    def test_zero_has_no_inverse(self):
        """Test that inverting zero raises."""
        with pytest.raises(ZeroDivisionError):
            FieldElement(0, 3).inverse()

    def test_mixed_moduli_rejected(self):
        """Test that elements of different fields do not mix."""
        with pytest.raises(ValueError, match="Mixed moduli"):
            FieldElement(1, 2) + FieldElement(1, 3)


class TestRowReduction:
    """Tests for rref, rank and kernels."""

    def test_rref_identity(self):
        """Test that an invertible matrix reduces to the identity."""
        red = rref([[1, 1], [0, 1]], 2)
        assert red.rank == 2
        assert red.pivots == (0, 1)
        assert red.matrix.tolist() == [[1, 0], [0, 1]]

    def test_rank_depends_on_characteristic(self):
        """Test that [[1,1],[1,-1]] is singular only in characteristic 2."""
        m = [[1, 1], [1, -1]]
        assert rank(m, 2) == 1
        assert rank(m, 3) == 2

    def test_rank_of_empty(self):
        """Test that an empty matrix has rank zero."""
        assert rank(np.zeros((0, 3), dtype=np.int64), 2) == 0

    def test_kernel_basis(self):
        """Test that kernel rows are annihilated and have the right count."""
        m = np.array([[1, 2, 0], [0, 0, 1]])
        kernel = kernel_basis(m, 3)
        assert kernel.shape == (1, 3)
        assert not ((m @ kernel.T) % 3).any()

    def test_kernel_of_no_rows_is_everything(self):
        """Test that a matrix without rows has the identity as kernel basis."""
        kernel = kernel_basis(np.zeros((0, 2), dtype=np.int64), 5, cols=2)
        assert kernel.tolist() == [[1, 0], [0, 1]]


class TestSolving:
    """Tests for solve and inverses."""

    def test_solve_consistent(self):
        """Test that a solution satisfies the system."""
        m = np.array([[1, 1], [0, 1]])
        x = solve(m, [1, 0], 2)
        assert x is not None
        assert ((m @ x) % 2).tolist() == [1, 0]

    def test_solve_inconsistent(self):
        """Test that an inconsistent system returns None."""
        assert solve([[1, 1], [1, 1]], [0, 1], 2) is None

    def test_inverse_matrix(self):
        """Test that M @ inverse(M) is the identity."""
        m = np.array([[2, 1], [1, 1]])
        inv = inverse_matrix(m, 5)
        assert ((m @ inv) % 5).tolist() == [[1, 0], [0, 1]]

    def test_inverse_of_singular_raises(self):
        """Test that a singular matrix cannot be inverted."""
        with pytest.raises(ValueError, match="singular"):
            inverse_matrix([[1, 1], [1, 1]], 2)

    def test_left_inverse(self):
        """Test that L @ M = I for a tall matrix of full column rank."""
        m = np.array([[1, 0], [1, 1], [0, 1]])
        left = left_inverse(m, 2)
        assert ((left @ m) % 2).tolist() == [[1, 0], [0, 1]]

    def test_independent_rows_skips_dependent(self):
        """Test that a repeated row is not picked twice."""
        assert independent_rows([[1, 0], [1, 0], [0, 1]], 2) == [0, 2]


class TestIntegerDeterminant:
    """Tests for exact determinants over the integers."""

    @pytest.mark.parametrize(
        "matrix,expected",
        [
            ([[2, 1], [1, 1]], 1),
            ([[2, 0], [0, 1]], 2),
            ([[0, 1], [1, 0]], -1),
            ([[1, 2, 3], [0, 1, 4], [5, 6, 0]], 1),
            ([[1, 2], [2, 4]], 0),
            ([[0, 0], [0, 3]], 0),
        ],
    )
    def test_small_matrices(self, matrix, expected):
        """Test determinants that are easy to check by hand."""
        assert integer_determinant(matrix) == expected

    def test_empty_matrix(self):
        """Test that the empty determinant is one."""
        assert integer_determinant([]) == 1

    def test_large_entries_stay_exact(self):
        """Test a unimodular matrix whose entries overflow float precision."""
        big = 3**30
        assert integer_determinant([[big + 1, big], [big, big - 1]]) == -1

    def test_non_square_rejected(self):
        """Test that only square matrices have determinants."""
        with pytest.raises(ValueError):
            integer_determinant([[1, 2, 3], [4, 5, 6]])

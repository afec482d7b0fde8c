#!/usr/bin/env python3
"""
Unit Tests for corrcli.scalars.linalg

Tests the exact sparse Matrix type including:
- Construction and shape errors
- Products, Kronecker products and stacking
- Elimination: rank, nullspace, inverse, solve

Version: 1.0.0
"""

import pytest
from hypothesis import given, settings, strategies as st

from corrcli.core.errors import NotInvertible, ShapeMismatch
from corrcli.scalars import FieldElement, Matrix, root_of_unity


def small_matrices(n: int):
    entry = st.integers(min_value=-3, max_value=3)
    return st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix.from_rows)


# ============================================================================
# Test Construction
# ============================================================================

class TestConstruction:
    """Tests for constructors and accessors."""

    @pytest.mark.unit
    def test_from_rows_drops_zeros(self):
        m = Matrix.from_rows([[1, 0], [0, 2]])
        assert m.shape == (2, 2)
        assert len(m.entries) == 2
        assert m[0, 1].is_zero()

    @pytest.mark.unit
    def test_ragged_rows_rejected(self):
        with pytest.raises(ShapeMismatch):
            Matrix.from_rows([[1, 2], [3]])

    @pytest.mark.unit
    def test_entry_outside_shape_rejected(self):
        with pytest.raises(ShapeMismatch):
            Matrix(2, 2, {(2, 0): 1})

    @pytest.mark.unit
    def test_json_uses_field_strings(self):
        m = Matrix.from_rows([[root_of_unity(4), "1/2"]], order=4)
        assert m.to_json() == [["z", "1/2"]]

    @pytest.mark.unit
    def test_identity_and_column(self):
        assert Matrix.identity(3).is_identity()
        assert Matrix.column([1, 2, 3]).shape == (3, 1)


# ============================================================================
# Test Products
# ============================================================================

class TestProducts:
    """Tests for @, kron and stacking."""

    @pytest.mark.unit
    def test_matmul(self):
        a = Matrix.from_rows([[1, 2], [3, 4]])
        b = Matrix.from_rows([[0, 1], [1, 0]])
        assert a @ b == Matrix.from_rows([[2, 1], [4, 3]])

    @pytest.mark.unit
    def test_matmul_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            Matrix.identity(2) @ Matrix.identity(3)

    @pytest.mark.unit
    def test_kron_shape_and_entry(self):
        a = Matrix.from_rows([[1, 2], [3, 4]])
        b = Matrix.from_rows([[0, 5], [6, 7]])
        k = a.kron(b)
        assert k.shape == (4, 4)
        assert k[3, 3] == 28
        assert k[0, 1] == 5

    @pytest.mark.unit
    def test_block_diag(self):
        m = Matrix.block_diag([Matrix.identity(1), Matrix.from_rows([[2]])])
        assert m == Matrix.diag([1, 2])

    @pytest.mark.unit
    def test_first_difference(self):
        a = Matrix.from_rows([[1, 2]])
        b = Matrix.from_rows([[1, 3]])
        assert a.first_difference(b) == {"row": 0, "col": 1, "lhs": "2", "rhs": "3"}
        assert a.first_difference(a) is None


# ============================================================================
# Test Elimination
# ============================================================================

class TestElimination:
    """Tests for rank, nullspace, inverse and solve."""

    @pytest.mark.unit
    def test_rank_of_singular_matrix(self):
        assert Matrix.from_rows([[1, 2], [2, 4]]).rank() == 1

    @pytest.mark.unit
    def test_nullspace_is_annihilated(self):
        m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
        ns = m.nullspace()
        assert ns.shape == (3, 2)
        assert (m @ ns).is_zero()

    @pytest.mark.unit
    def test_inverse_over_cyclotomic_field(self):
        z = root_of_unity(5)
        m = Matrix.from_rows([[1, z], [z ** 2, 1]], order=5)
        assert (m @ m.inverse()).is_identity()

    @pytest.mark.unit
    def test_singular_inverse_raises(self):
        with pytest.raises(NotInvertible):
            Matrix.from_rows([[1, 1], [1, 1]]).inverse()

    @pytest.mark.unit
    def test_solve(self):
        a = Matrix.from_rows([[2, 0], [0, 4]])
        x = a.solve(Matrix.column([1, 1]))
        assert x == Matrix.column([FieldElement.parse("1/2"), FieldElement.parse("1/4")])

    @pytest.mark.unit
    def test_solve_inconsistent(self):
        a = Matrix.from_rows([[1, 1], [1, 1]])
        assert a.solve(Matrix.column([0, 1])) is None

    @pytest.mark.unit
    @settings(max_examples=25, deadline=None)
    @given(small_matrices(3))
    def test_rank_nullity(self, m):
        assert m.rank() + m.nullspace().cols == 3

    @pytest.mark.unit
    @settings(max_examples=25, deadline=None)
    @given(small_matrices(3))
    def test_invertible_matrices_invert(self, m):
        if m.is_invertible():
            assert (m.inverse() @ m).is_identity()

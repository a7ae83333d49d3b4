import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import logical_matrices
from stp_core import (
    DimensionError,
    LogicalMatrix,
    NotLogicalError,
    RationalMatrix,
    StateVector,
    identity,
    index_to_state,
    is_logical,
    kron,
    mul_transpose,
    ones_row,
    state_to_index,
    stp,
    swap_matrix,
)


def column(rows: int, k: int) -> LogicalMatrix:
    return LogicalMatrix(rows, [k])


class TestLogicalMatrix:
    def test_rejects_out_of_range_entries(self):
        with pytest.raises(NotLogicalError):
            LogicalMatrix(2, [1, 3])
        with pytest.raises(NotLogicalError):
            LogicalMatrix(2, [0, 1])

    def test_rejects_empty(self):
        with pytest.raises(DimensionError):
            LogicalMatrix(2, [])

    def test_dense_round_trip(self):
        A = LogicalMatrix(3, [2, 1, 3, 3])
        assert A.to_dense().tolist() == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 1]]
        assert LogicalMatrix.from_dense(A.to_dense()) == A

    def test_from_dense_rejects_two_ones_in_a_column(self):
        with pytest.raises(NotLogicalError):
            LogicalMatrix.from_dense([[1, 0], [1, 1]])

    def test_permutation_transpose_is_inverse(self):
        T = LogicalMatrix(4, [3, 1, 4, 2])
        assert T @ T.T == identity(4)
        assert T.T @ T == identity(4)

    def test_transpose_of_non_permutation_fails(self):
        with pytest.raises(NotLogicalError):
            LogicalMatrix(2, [1, 1]).transpose()

    def test_column_blocks_and_hstack(self):
        L = LogicalMatrix(4, [1, 2, 3, 4, 4, 3, 2, 1])
        left, right = L.column_blocks(2)
        assert left.indices == (1, 2, 3, 4)
        assert right.indices == (4, 3, 2, 1)
        assert LogicalMatrix.hstack([left, right]) == L
        with pytest.raises(DimensionError):
            L.column_blocks(3)

    def test_product_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            LogicalMatrix(2, [1, 2, 1]) @ LogicalMatrix(2, [1, 2])

    def test_repr_uses_delta_notation(self):
        assert repr(LogicalMatrix(4, [1, 3, 2, 4])) == 'δ_4[1,3,2,4]'

    @given(logical_matrices())
    def test_column_sums_are_one(self, A):
        assert (ones_row(A.rows) @ A) == ones_row(A.cols)


class TestProducts:
    def test_stp_of_two_columns_packs_states(self):
        assert stp(column(2, 1), column(2, 2)) == column(4, 2)

    def test_stp_with_identity(self):
        assert stp(identity(2), LogicalMatrix(2, [2, 1])) == LogicalMatrix(2, [2, 1])

    def test_stp_pads_to_common_dimension(self):
        A = LogicalMatrix(2, [2, 1])
        B = LogicalMatrix(4, [1, 3, 2, 4])
        logical = stp(A, B)
        dense = stp(RationalMatrix.from_logical(A), RationalMatrix.from_logical(B))
        assert logical == LogicalMatrix(4, [3, 1, 4, 2])
        assert dense.to_logical() == logical

    def test_kron_examples(self):
        assert kron(identity(2), column(2, 1)) == LogicalMatrix(4, [1, 3])
        A = LogicalMatrix(3, [2, 3, 1])
        assert kron(identity(1), A) == A
        assert kron(ones_row(2), identity(2)).to_dense().tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]

    def test_kron_mixed_operands_is_exact(self):
        half = RationalMatrix([[1, 1]], 2)
        result = kron(half, identity(2))
        assert result.denominator == 2
        assert result.numerators.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]

    @pytest.mark.parametrize("m, n, expected", [
        (2, 2, [1, 3, 2, 4]),
        (2, 4, [1, 3, 5, 7, 2, 4, 6, 8]),
        (1, 3, [1, 2, 3]),
        (3, 1, [1, 2, 3]),
    ])
    def test_swap_matrix(self, m, n, expected):
        assert swap_matrix(m, n).indices == tuple(expected)

    def test_swap_matrix_rejects_zero(self):
        with pytest.raises(DimensionError):
            swap_matrix(0, 2)

    @pytest.mark.parametrize("m", range(1, 9))
    @pytest.mark.parametrize("n", range(1, 9))
    def test_swap_transpose_and_inverse(self, m, n):
        W = swap_matrix(m, n)
        assert W.T == swap_matrix(n, m)
        assert W @ swap_matrix(n, m) == identity(m * n)

    def test_swap_exchanges_factors(self):
        x, y = column(2, 1), column(3, 2)
        assert swap_matrix(2, 3) @ stp(x, y) == stp(y, x)

    @settings(max_examples=60)
    @given(logical_matrices(4, 4), logical_matrices(4, 4))
    def test_swap_commutes_kronecker_factors(self, A, B):
        m, n = A.shape
        p, q = B.shape
        assert swap_matrix(m, p) @ kron(A, B) @ swap_matrix(q, n) == kron(B, A)

    @settings(max_examples=60)
    @given(logical_matrices(), logical_matrices(), logical_matrices())
    def test_stp_is_associative(self, A, B, C):
        assert stp(stp(A, B), C) == stp(A, stp(B, C))

    @settings(max_examples=40)
    @given(logical_matrices(), logical_matrices())
    def test_stp_logical_path_matches_dense_expansion(self, A, B):
        dense = stp(RationalMatrix.from_logical(A), RationalMatrix.from_logical(B))
        assert dense.to_logical() == stp(A, B)

    def test_mul_transpose_counts_shared_columns(self):
        A = LogicalMatrix(2, [1, 1, 2, 2])
        B = LogicalMatrix(2, [1, 2, 1, 2])
        assert mul_transpose(A, B).numerators.tolist() == [[1, 1], [1, 1]]
        assert mul_transpose(A, A) == RationalMatrix([[2, 0], [0, 2]])

    def test_mul_transpose_of_permutation_is_identity(self):
        T = LogicalMatrix(4, [2, 4, 1, 3])
        assert mul_transpose(T, T).to_logical() == identity(4)


class TestRationalMatrix:
    @pytest.mark.parametrize("numerators, denominator, expected", [
        ([[4, 0], [0, 4]], 4, True),
        ([[3, 1], [1, 3]], 4, False),
        ([[2, 2], [0, 0]], 2, True),
        ([[1, 0], [0, 0]], 1, False),
    ])
    def test_is_logical(self, numerators, denominator, expected):
        assert is_logical(RationalMatrix(numerators, denominator)) is expected

    def test_lowest_terms(self):
        R = RationalMatrix([[2, 2], [0, 0]], 2)
        assert R.denominator == 1
        assert R.to_logical() == LogicalMatrix(2, [1, 1])

    def test_negative_denominator_is_normalised(self):
        R = RationalMatrix([[1, -1]], -2)
        assert R.denominator == 2
        assert R.numerators.tolist() == [[-1, 1]]

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalMatrix([[1]], 0)

    def test_render(self):
        assert RationalMatrix([[3, 1], [1, 3]], 4).render() == '1/4·[[3,1],[1,3]]'
        assert RationalMatrix([[1, 0]], 1).render() == '[[1,0]]'

    def test_scaled_and_fractions(self):
        R = RationalMatrix([[2, 6]], 1).scaled(Fraction(1, 4))
        assert R.to_fractions() == [[Fraction(1, 2), Fraction(3, 2)]]
        assert RationalMatrix.from_fractions([[Fraction(1, 2), 1]]) == RationalMatrix([[1, 2]], 2)

    def test_equality_with_logical(self):
        assert RationalMatrix([[1, 0], [0, 1]]) == identity(2)


class TestStates:
    @pytest.mark.parametrize("bits, k", [
        ((True, True, True), 1),
        ((False, False, False), 8),
        ((True, False, True), 3),
        ((True, True, False), 2),
    ])
    def test_state_to_index(self, bits, k):
        assert state_to_index(StateVector(bits)) == k
        assert index_to_state(k, len(bits)).bits == bits

    @pytest.mark.parametrize("n", [1, 4, 10])
    def test_index_state_bijection(self, n):
        assert [state_to_index(index_to_state(k, n)) for k in range(1, 2 ** n + 1)] == \
            list(range(1, 2 ** n + 1))

    def test_index_matches_stp_of_columns(self):
        bits = (False, True, False)
        packed = stp(stp(column(2, 2), column(2, 1)), column(2, 2))
        assert packed.indices == (state_to_index(StateVector(bits)),)

    @pytest.mark.parametrize("k", [0, 9])
    def test_index_out_of_range(self, k):
        with pytest.raises(DimensionError):
            index_to_state(k, 3)

    def test_render(self):
        assert index_to_state(3, 3).render() == '(1,0,1)'

    @given(st.lists(st.booleans(), min_size=1, max_size=8))
    def test_index_within_range(self, bits):
        k = state_to_index(StateVector(tuple(bits)))
        assert 1 <= k <= 2 ** len(bits)
        assert np.array_equal(index_to_state(k, len(bits)).bits, bits)


@pytest.mark.parametrize("m, n, p, q", list(itertools.product(range(1, 5), repeat=4)))
def test_swap_identity_for_all_small_shapes(rng, m, n, p, q):
    A = LogicalMatrix(m, rng.integers(1, m + 1, size=n))
    B = LogicalMatrix(p, rng.integers(1, p + 1, size=q))
    assert swap_matrix(m, p) @ kron(A, B) @ swap_matrix(q, n) == kron(B, A)

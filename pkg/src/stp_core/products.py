"""Semi-tensor product, Kronecker product and swap matrices.

When both operands are logical the products are computed by index arithmetic on the
delta vectors; otherwise the operands are expanded to exact rational grids.
"""

import math
from typing import Union

import numpy as np

from .errors import DimensionError
from .logical_matrix import LogicalMatrix
from .rational_matrix import RationalMatrix

Matrix = Union[LogicalMatrix, RationalMatrix]


def _as_rational(matrix: Matrix) -> RationalMatrix:
    if isinstance(matrix, LogicalMatrix):
        return RationalMatrix.from_logical(matrix)
    return matrix


def _kron_identity_logical(matrix: LogicalMatrix, size: int) -> LogicalMatrix:
    """``matrix ⊗ I_size`` in delta form."""
    if size == 1:
        return matrix
    offsets = np.arange(1, size + 1)
    delta = ((matrix.delta - 1)[:, None] * size + offsets[None, :]).reshape(-1)
    return LogicalMatrix(matrix.rows * size, delta)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; logical ⊗ logical stays in delta form."""
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        delta = ((a.delta - 1)[:, None] * b.rows + b.delta[None, :]).reshape(-1)
        return LogicalMatrix(a.rows * b.rows, delta)
    ra, rb = _as_rational(a), _as_rational(b)
    return RationalMatrix(np.kron(ra.numerators, rb.numerators),
                          ra.denominator * rb.denominator)


def stp(a: Matrix, b: Matrix) -> Matrix:
    """Left semi-tensor product ``(A ⊗ I_{α/n})(B ⊗ I_{α/p})`` with ``α = lcm(n, p)``."""
    n, p = a.cols, b.rows
    alpha = math.lcm(n, p)
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        left = _kron_identity_logical(a, alpha // n)
        right = _kron_identity_logical(b, alpha // p)
        return left @ right
    ra, rb = _as_rational(a), _as_rational(b)
    left = np.kron(ra.numerators, np.eye(alpha // n, dtype=np.int64))
    right = np.kron(rb.numerators, np.eye(alpha // p, dtype=np.int64))
    return RationalMatrix(left @ right, ra.denominator * rb.denominator)


def swap_matrix(m: int, n: int) -> LogicalMatrix:
    """``W_[m,n] = [I_n ⊗ δ_m^1, ..., I_n ⊗ δ_m^m]``."""
    if m < 1 or n < 1:
        raise DimensionError(f"swap matrix dimensions must be positive, got ({m}, {n})")
    i = np.arange(1, m + 1)[:, None]
    j = np.arange(1, n + 1)[None, :]
    # column (i-1)*n + j holds a 1 in row (j-1)*m + i
    return LogicalMatrix(m * n, ((j - 1) * m + i).reshape(-1))


def mul_transpose(a: LogicalMatrix, b: LogicalMatrix) -> RationalMatrix:
    """``A · B^T`` for logical matrices with equal column counts.

    Entry ``(i, k)`` counts the columns ``c`` with ``A[c] = i`` and ``B[c] = k``.
    """
    if a.cols != b.cols:
        raise DimensionError(f"A·B^T needs equal column counts, got {a.cols} and {b.cols}")
    counts = np.zeros((a.rows, b.rows), dtype=np.int64)
    np.add.at(counts, (a.delta - 1, b.delta - 1), 1)
    return RationalMatrix(counts, 1)


def is_logical(matrix: Matrix) -> bool:
    if isinstance(matrix, LogicalMatrix):
        return True
    return matrix.is_logical()


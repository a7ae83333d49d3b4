"""Exact semi-tensor product kernel for logical matrices in delta form."""

from .errors import DimensionError, NotLogicalError
from .logical_matrix import LogicalMatrix, identity, ones_row
from .rational_matrix import RationalMatrix
from .products import kron, mul_transpose, stp, swap_matrix, is_logical
from .states import StateVector, state_to_index, index_to_state

__all__ = [
    'DimensionError',
    'NotLogicalError',
    'LogicalMatrix',
    'identity',
    'ones_row',
    'RationalMatrix',
    'kron',
    'mul_transpose',
    'stp',
    'swap_matrix',
    'is_logical',
    'StateVector',
    'state_to_index',
    'index_to_state',
]

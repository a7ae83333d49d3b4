"""Read logical equations back out of structure matrices."""

from typing import List, Sequence

import numpy as np

from bool_expr import Expr, TruthTable, table_to_dnf
from stp_core import LogicalMatrix

from .dsl import format_model_text
from .network import BCN


def bit_tables(matrix: LogicalMatrix, bits: int) -> List[np.ndarray]:
    """Per-bit truth values of the packed vector each column of ``matrix`` holds.

    ``matrix`` must have ``2**bits`` rows; bit ``i`` is true where the unpacked variable
    ``i`` (outermost first) equals ``δ_2^1``.
    """
    if matrix.rows != 2 ** bits:
        raise ValueError(f"expected {2 ** bits} rows for {bits} bits, got {matrix.rows}")
    offsets = matrix.delta - 1
    return [((offsets >> (bits - 1 - i)) & 1) == 0 for i in range(bits)]


def matrix_to_exprs(matrix: LogicalMatrix, bits: int, arguments: Sequence[str]) -> List[Expr]:
    """One DNF expression per bit, over ``arguments`` in packing order."""
    if matrix.cols != 2 ** len(arguments):
        raise ValueError(f"{matrix.cols} columns do not match {len(arguments)} arguments")
    return [table_to_dnf(TruthTable.from_array(arguments, values))
            for values in bit_tables(matrix, bits)]


def to_equations(bcn: BCN) -> str:
    """Model text that re-assembles to exactly ``(L, H)``."""
    updates = matrix_to_exprs(bcn.L, bcn.n, bcn.input_names + bcn.state_names)
    outputs = matrix_to_exprs(bcn.H, bcn.p, bcn.state_names)
    return format_model_text(bcn.state_names, bcn.input_names, bcn.output_names, updates, outputs)

"""Boolean control networks: assembly, simulation, coordinate changes and decompilation."""

from .errors import ModelError
from .network import BCN, Trajectory, assemble, blocks, default_names, pack_bits, simulate, step, transform
from .dsl import format_model_text, parse_model_text
from .decompile import bit_tables, matrix_to_exprs, to_equations
from .decomposed import DecomposedBCN
from .examples import (
    CATALOG,
    flip_flops,
    non_regular_network,
    odd_block_network,
    shift_register,
    shift_register_matrix,
)

__all__ = [
    'ModelError',
    'BCN',
    'Trajectory',
    'assemble',
    'blocks',
    'default_names',
    'pack_bits',
    'simulate',
    'step',
    'transform',
    'format_model_text',
    'parse_model_text',
    'bit_tables',
    'matrix_to_exprs',
    'to_equations',
    'DecomposedBCN',
    'CATALOG',
    'flip_flops',
    'non_regular_network',
    'odd_block_network',
    'shift_register',
    'shift_register_matrix',
]

"""Reference networks used by the tests, the README and ``data/models``."""

import numpy as np

from stp_core import LogicalMatrix, ones_row, stp, swap_matrix

from .dsl import parse_model_text
from .network import BCN

FLIP_FLOPS_TEXT = """\
# three flip-flops, one input, one output; decomposable of order 1
states: x1, x2, x3
inputs: u
outputs: y
x1' = x3 | u
x2' = (x1 & !x3) | (!x1 & (x3 <-> u))
x3' = x3 -> u
y = (x1 <-> x3) -> (x2 ^ x3)
"""


def flip_flops() -> BCN:
    return parse_model_text(FLIP_FLOPS_TEXT)


def shift_register_text(n: int) -> str:
    if n < 1:
        raise ValueError(f"shift register needs at least one cell, got n={n}")
    names = [f"x{i}" for i in range(1, n + 1)]
    lines = [f"states: {', '.join(names)}", "inputs: u", "outputs: y"]
    lines += [f"{names[i]}' = {names[i + 1]}" for i in range(n - 1)]
    lines += [f"{names[-1]}' = u", "y = x1"]
    return '\n'.join(lines) + '\n'


def shift_register(n: int) -> BCN:
    """``x_i' = x_{i+1}``, ``x_n' = u``, ``y = x_1``: observable and undecomposable."""
    return parse_model_text(shift_register_text(n))


def shift_register_matrix(n: int) -> BCN:
    """The same register from the closed form ``L = 1_2^T ⋉ W_[2,2^n]``."""
    if n < 1:
        raise ValueError(f"shift register needs at least one cell, got n={n}")
    half = 2 ** (n - 1)
    L = stp(ones_row(2), swap_matrix(2, 2 ** n))
    H = LogicalMatrix(2, np.repeat([1, 2], half))
    return BCN(n=n, m=1, p=1, L=L, H=H)


def odd_block_network() -> BCN:
    """Autonomous network that is unobservable yet has no decomposition of order >= 1."""
    return BCN(n=2, m=0, p=1,
               L=LogicalMatrix(4, [1, 2, 3, 1]),
               H=LogicalMatrix(2, [1, 1, 1, 2]))


def non_regular_network() -> BCN:
    """Order-1 decomposable network with three maximum partitions and a non-regular unobservable subspace."""
    L1 = LogicalMatrix(8, [6, 8, 1, 8, 7, 8, 6, 8])
    L2 = LogicalMatrix(8, [6, 8, 7, 8, 1, 8, 6, 8])
    return BCN(n=3, m=1, p=1,
               L=LogicalMatrix.hstack([L1, L2]),
               H=LogicalMatrix(2, [1, 1, 2, 1, 2, 1, 1, 1]))


CATALOG = {
    'flip_flops': flip_flops,
    'shift_register3': lambda: shift_register(3),
    'shift_register4': lambda: shift_register(4),
    'odd_block': odd_block_network,
    'non_regular_network': non_regular_network,
}

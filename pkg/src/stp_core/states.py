"""Conversion between Boolean state tuples and delta indices.

True is identified with δ_2^1 and False with δ_2^2, so the packed product
x_1 ⋉ ... ⋉ x_n of a state is δ_{2^n}^k with ``k = 1 + Σ (1 - b_i) 2^(n-i)``.
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import DimensionError


@dataclass(frozen=True)
class StateVector:
    bits: Tuple[bool, ...]

    @property
    def n(self) -> int:
        return len(self.bits)

    def render(self) -> str:
        return '(' + ','.join('1' if b else '0' for b in self.bits) + ')'


def state_to_index(state: StateVector) -> int:
    index = 0
    for bit in state.bits:
        index = 2 * index + (0 if bit else 1)
    return index + 1


def index_to_state(k: int, n: int) -> StateVector:
    if n < 0 or not 1 <= k <= 2 ** n:
        raise DimensionError(f"index {k} out of range 1..{2 ** n}")
    offset = k - 1
    return StateVector(tuple(not (offset >> (n - 1 - i)) & 1 for i in range(n)))

"""Logical matrices stored in delta form.

A logical matrix has exactly one 1 in every column, so it is fully described by the
row index of that 1 in each column: ``delta_r[i_1, ..., i_c]``. Indices are 1-based in
every public accessor; the backing array is 1-based as well so that printed values match
the usual notation.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import DimensionError, NotLogicalError


def _as_delta_array(delta: Union[Sequence[int], np.ndarray]) -> np.ndarray:
    arr = np.array(delta, dtype=np.int64).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LogicalMatrix:
    """A ``rows x len(delta)`` 0/1 matrix with one 1 per column."""

    rows: int
    delta: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'delta', _as_delta_array(self.delta))
        if self.rows < 1:
            raise DimensionError(f"row count must be positive, got {self.rows}")
        if self.delta.size == 0:
            raise DimensionError("a logical matrix needs at least one column")
        low, high = int(self.delta.min()), int(self.delta.max())
        if low < 1 or high > self.rows:
            raise NotLogicalError(
                f"delta entries must lie in 1..{self.rows}, found range {low}..{high}"
            )

    @property
    def cols(self) -> int:
        return int(self.delta.size)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def indices(self) -> Tuple[int, ...]:
        """Delta entries as a tuple of Python ints (1-based)."""
        return tuple(int(v) for v in self.delta.tolist())

    def column(self, q: int) -> int:
        """Row index of the 1 in column ``q`` (both 1-based)."""
        if not 1 <= q <= self.cols:
            raise DimensionError(f"column {q} out of range 1..{self.cols}")
        return int(self.delta[q - 1])

    @classmethod
    def from_dense(cls, dense: Union[Sequence[Sequence[int]], np.ndarray]) -> 'LogicalMatrix':
        arr = np.asarray(dense, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionError("dense matrix must be two dimensional")
        if not (np.isin(arr, (0, 1)).all() and (arr.sum(axis=0) == 1).all()):
            raise NotLogicalError("matrix is not logical: need exactly one 1 per column")
        return cls(arr.shape[0], np.argmax(arr, axis=0) + 1)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.int64)
        dense[self.delta - 1, np.arange(self.cols)] = 1
        return dense

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        return bool(np.unique(self.delta).size == self.cols)

    def transpose(self) -> 'LogicalMatrix':
        """Transpose of a permutation matrix, which is its inverse."""
        if not self.is_permutation():
            raise NotLogicalError("only permutation matrices have a logical transpose")
        inverse = np.empty(self.cols, dtype=np.int64)
        inverse[self.delta - 1] = np.arange(1, self.cols + 1)
        return LogicalMatrix(self.rows, inverse)

    @property
    def T(self) -> 'LogicalMatrix':
        return self.transpose()

    def column_blocks(self, count: int) -> List['LogicalMatrix']:
        """Split into ``count`` equally wide column blocks ``[A_1, ..., A_count]``."""
        if count < 1 or self.cols % count:
            raise DimensionError(f"cannot split {self.cols} columns into {count} blocks")
        width = self.cols // count
        return [
            LogicalMatrix(self.rows, self.delta[k * width:(k + 1) * width])
            for k in range(count)
        ]

    @classmethod
    def hstack(cls, blocks: Iterable['LogicalMatrix']) -> 'LogicalMatrix':
        blocks = list(blocks)
        rows = {b.rows for b in blocks}
        if len(rows) != 1:
            raise DimensionError(f"blocks have differing row counts: {sorted(rows)}")
        return cls(rows.pop(), np.concatenate([b.delta for b in blocks]))

    def __matmul__(self, other: 'LogicalMatrix') -> 'LogicalMatrix':
        """Ordinary product; requires ``self.cols == other.rows``."""
        if not isinstance(other, LogicalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return LogicalMatrix(self.rows, self.delta[other.delta - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogicalMatrix):
            return NotImplemented
        return self.rows == other.rows and np.array_equal(self.delta, other.delta)

    def __hash__(self) -> int:
        return hash((self.rows, self.delta.tobytes()))

    def __repr__(self) -> str:
        return f"δ_{self.rows}[{','.join(str(v) for v in self.delta.tolist())}]"

    __str__ = __repr__


def identity(size: int) -> LogicalMatrix:
    return LogicalMatrix(size, np.arange(1, size + 1))


def ones_row(size: int) -> LogicalMatrix:
    """The all-ones row vector ``1_size^T``, which is the logical matrix ``δ_1[1,...,1]``."""
    return LogicalMatrix(1, np.ones(size, dtype=np.int64))

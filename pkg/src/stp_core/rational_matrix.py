"""Exact rational matrices: an integer numerator grid over one shared denominator."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import DimensionError
from .logical_matrix import LogicalMatrix


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    """``numerators / denominator`` kept in lowest terms."""

    numerators: np.ndarray = field(repr=False)
    denominator: int = 1

    def __post_init__(self):
        num = np.array(self.numerators, dtype=np.int64)
        if num.ndim != 2 or 0 in num.shape:
            raise DimensionError("numerators must be a non-empty 2-D grid")
        den = int(self.denominator)
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        common = math.gcd(int(np.gcd.reduce(np.abs(num), axis=None)), den)
        if common > 1:
            num //= common
            den //= common
        num.setflags(write=False)
        object.__setattr__(self, 'numerators', num)
        object.__setattr__(self, 'denominator', den)

    @property
    def rows(self) -> int:
        return int(self.numerators.shape[0])

    @property
    def cols(self) -> int:
        return int(self.numerators.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def from_logical(cls, matrix: LogicalMatrix) -> 'RationalMatrix':
        return cls(matrix.to_dense(), 1)

    @classmethod
    def from_fractions(cls, grid: Sequence[Sequence[Union[int, Fraction]]]) -> 'RationalMatrix':
        fracs = [[Fraction(v) for v in row] for row in grid]
        den = math.lcm(*(f.denominator for row in fracs for f in row))
        return cls([[int(f * den) for f in row] for row in fracs], den)

    def scaled(self, factor: Union[int, Fraction]) -> 'RationalMatrix':
        factor = Fraction(factor)
        return RationalMatrix(self.numerators * factor.numerator,
                              self.denominator * factor.denominator)

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(self.numerators.T, self.denominator)

    def is_logical(self) -> bool:
        return self.to_logical() is not None

    def to_logical(self) -> Optional[LogicalMatrix]:
        """The equal logical matrix, or ``None`` if the entries are not 0/1 with one 1 per column."""
        if self.denominator != 1:
            # lowest terms: any entry still over a denominator > 1 is not an integer
            if np.any(self.numerators % self.denominator):
                return None
        quotient = self.numerators // self.denominator
        if not (np.isin(quotient, (0, 1)).all() and (quotient.sum(axis=0) == 1).all()):
            return None
        return LogicalMatrix.from_dense(quotient)

    def to_fractions(self) -> List[List[Fraction]]:
        return [[Fraction(int(v), self.denominator) for v in row] for row in self.numerators.tolist()]

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return RationalMatrix(self.numerators @ other.numerators,
                              self.denominator * other.denominator)

    def __eq__(self, other) -> bool:
        if isinstance(other, LogicalMatrix):
            other = RationalMatrix.from_logical(other)
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.denominator == other.denominator
                and np.array_equal(self.numerators, other.numerators))

    def __hash__(self) -> int:
        return hash((self.shape, self.denominator, self.numerators.tobytes()))

    def render(self) -> str:
        """``1/4·[[3,1],[1,3]]`` style rendering; the prefix is dropped for integer matrices."""
        body = '[' + ','.join('[' + ','.join(str(v) for v in row) + ']'
                              for row in self.numerators.tolist()) + ']'
        if self.denominator == 1:
            return body
        return f"1/{self.denominator}·{body}"

    def __repr__(self) -> str:
        return f"RationalMatrix({self.render()})"

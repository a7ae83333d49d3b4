"""Observability matrix: all distinct products ``H L_{j1} ... L_{jr}`` and their column classes.

The column partition comes from signature refinement: start from the output colouring and
split blocks by the blocks of their successors until nothing changes. That needs
``O(2^n)`` memory per round and at most ``2^n`` rounds.

The explicit matrix is a breadth-first search over input words, deduplicated by value, so each
row keeps its shortest witness word and rows come out ordered by (length, lexicographic word).
Its size can grow like ``(2^p)^(2^n)``, so callers cap it.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Tuple

import numpy as np

from bcn_model import BCN, blocks
from stp_core import LogicalMatrix

from .errors import AnalysisError, InvariantViolation
from .partition import Partition, gcr

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def render_word(word: Word) -> str:
    """``ε`` for the empty word, otherwise the input indices run together."""
    return ''.join(str(j) for j in word) if word else 'ε'


@dataclass(frozen=True)
class ObservabilityRow:
    word: Word
    row: LogicalMatrix


@dataclass(frozen=True)
class ObservabilityMatrix:
    """Stacked rows of the observability matrix with one shortest witness word each."""

    rows: Tuple[ObservabilityRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def universe_size(self) -> int:
        return self.rows[0].row.cols

    @property
    def words(self) -> Tuple[Word, ...]:
        return tuple(r.word for r in self.rows)

    @property
    def r_star(self) -> int:
        """Length of the longest shortest witness word."""
        return max(len(r.word) for r in self.rows)

    def stacked(self) -> np.ndarray:
        """``len(self) x 2^n`` integer array of delta rows."""
        return np.vstack([r.row.delta for r in self.rows])

    def row_partitions(self) -> List[Partition]:
        return [Partition.from_labels(r.row.delta) for r in self.rows]


def obs_rows(bcn: BCN, max_rows: Optional[int] = None) -> ObservabilityMatrix:
    """Every distinct row of the observability matrix with its shortest witness word.

    Raises :class:`AnalysisError` once more than ``max_rows`` distinct rows turn up.
    """
    Ljs = blocks(bcn)
    found: List[ObservabilityRow] = [ObservabilityRow((), bcn.H)]
    seen: Dict[bytes, int] = {bcn.H.delta.tobytes(): 0}
    queue: Deque[int] = deque([0])
    while queue:
        current = found[queue.popleft()]
        for j, Lj in enumerate(Ljs, start=1):
            product = current.row @ Lj
            key = product.delta.tobytes()
            if key in seen:
                continue
            if max_rows is not None and len(found) >= max_rows:
                raise AnalysisError(
                    f"observability matrix has more than {max_rows} distinct rows; "
                    f"raise the row limit to list them"
                )
            seen[key] = len(found)
            queue.append(len(found))
            found.append(ObservabilityRow(current.word + (j,), product))
    matrix = ObservabilityMatrix(tuple(found))
    logger.info("Observability closure: %d distinct rows, r*=%d", len(matrix), matrix.r_star)
    return matrix


def refine_partition(bcn: BCN) -> Partition:
    """Coarsest partition that refines the output colouring and is respected by every ``L_j``."""
    successors = [Lj.delta - 1 for Lj in blocks(bcn)]
    labels = np.unique(bcn.H.delta, return_inverse=True)[1].reshape(-1)
    count = int(labels.max()) + 1
    rounds = 0
    while True:
        rounds += 1
        signature = np.column_stack([labels] + [labels[succ] for succ in successors])
        refined = np.unique(signature, axis=0, return_inverse=True)[1].reshape(-1)
        refined_count = int(refined.max()) + 1
        if refined_count == count:
            break
        labels, count = refined, refined_count
    logger.debug("Refinement stable after %d round(s) with %d blocks", rounds, count)
    return Partition.from_labels(labels)


def obs_partition(bcn: BCN, matrix: Optional[ObservabilityMatrix] = None) -> Partition:
    """Classes of equal columns of the observability matrix.

    Computed by :func:`refine_partition`. When ``matrix`` is given its column classes and
    the meet of its row partitions must agree with the refinement.
    """
    partition = refine_partition(bcn)
    if matrix is not None:
        _, inverse = np.unique(matrix.stacked(), axis=1, return_inverse=True)
        by_columns = Partition.from_labels(inverse.reshape(-1))
        by_rows = gcr(matrix.row_partitions())
        if not by_columns == by_rows == partition:
            raise InvariantViolation(
                f"refined partition {partition} differs from the matrix column classes "
                f"{by_columns} or the row meet {by_rows}"
            )
    logger.debug("Observability partition has %d blocks", len(partition))
    return partition


def is_observable_columns(bcn: BCN, partition: Optional[Partition] = None) -> bool:
    """True when all columns of the observability matrix differ.

    This is only the column test; concluding observability from it also needs global
    controllability, which is not checked here.
    """
    partition = partition if partition is not None else obs_partition(bcn)
    return len(partition) == partition.universe_size


def undecomposable_by_parity(C: Partition) -> bool:
    """A block of odd size rules out every decomposition of order >= 1."""
    return any(size % 2 for size in C.block_sizes())

"""Partitions of the vertex set ``{1..N}`` and the concolorous equal-partition test."""

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from functools import reduce
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

from stp_core import LogicalMatrix

from .errors import AnalysisError

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering ``{1..universe_size}``.

    Stored canonically: elements ascending within each block, blocks ordered by their minimum.
    Equality and hashing therefore ignore the order blocks were given in.
    """

    universe_size: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        canonical = tuple(sorted((tuple(sorted(int(v) for v in block)) for block in self.blocks),
                                 key=lambda block: block[0] if block else 0))
        if any(not block for block in canonical):
            raise AnalysisError("partition blocks must be nonempty")
        flat = np.sort(np.fromiter((v for block in canonical for v in block), dtype=np.int64))
        if flat.size != self.universe_size or not np.array_equal(
                flat, np.arange(1, self.universe_size + 1)):
            raise AnalysisError(
                f"blocks must be disjoint and cover 1..{self.universe_size} exactly"
            )
        object.__setattr__(self, 'blocks', canonical)

    @classmethod
    def from_blocks(cls, universe_size: int, blocks: Iterable[Iterable[int]]) -> 'Partition':
        return cls(universe_size, tuple(tuple(block) for block in blocks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> 'Partition':
        """Group vertex ``q`` (1-based) with every vertex carrying the same ``labels[q-1]``."""
        labels = np.asarray(labels)
        order = np.argsort(labels, kind='stable')
        cuts = np.flatnonzero(np.diff(labels[order])) + 1
        groups = np.split(order + 1, cuts)
        return cls(int(labels.size), tuple(tuple(g.tolist()) for g in groups))

    @classmethod
    def singletons(cls, universe_size: int) -> 'Partition':
        return cls(universe_size, tuple((q,) for q in range(1, universe_size + 1)))

    @classmethod
    def whole(cls, universe_size: int) -> 'Partition':
        return cls(universe_size, (tuple(range(1, universe_size + 1)),))

    def __len__(self) -> int:
        return len(self.blocks)

    def labels(self) -> np.ndarray:
        """0-based canonical block number of each vertex, indexed by ``q - 1``."""
        out = np.empty(self.universe_size, dtype=np.int64)
        for k, block in enumerate(self.blocks):
            out[np.asarray(block) - 1] = k
        return out

    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def is_equal(self) -> bool:
        return len(set(self.block_sizes())) == 1

    def render(self) -> str:
        return '{' + ', '.join('{' + ','.join(map(str, b)) + '}' for b in self.blocks) + '}'

    def __str__(self) -> str:
        return self.render()


def _check_universe(u: Partition, v: Partition) -> None:
    if u.universe_size != v.universe_size:
        raise AnalysisError(
            f"partitions over different universes: {u.universe_size} vs {v.universe_size}"
        )


def refines(u: Partition, v: Partition) -> bool:
    """Every block of ``u`` lies inside a block of ``v``."""
    _check_universe(u, v)
    pairs = u.labels() * len(v) + v.labels()
    return int(np.unique(pairs).size) == len(u)


def meet(u: Partition, v: Partition) -> Partition:
    """Nonempty pairwise intersections of blocks."""
    _check_universe(u, v)
    return Partition.from_labels(u.labels() * len(v) + v.labels())


def gcr(parts: Sequence[Partition]) -> Partition:
    """Greatest common refinement of one or more partitions."""
    parts = list(parts)
    if not parts:
        raise AnalysisError("greatest common refinement of an empty family is undefined")
    return reduce(meet, parts)


@dataclass(frozen=True)
class Coloring:
    """Vertex colours numbered 1, 2, ... by first occurrence."""

    universe_size: int
    color_of: Tuple[int, ...]

    @property
    def color_count(self) -> int:
        return max(self.color_of)

    def partition(self) -> Partition:
        return Partition.from_labels(self.color_of)


def color_classes(H: LogicalMatrix) -> Coloring:
    """Two vertices share a colour iff their columns of ``H`` are equal."""
    _, first, inverse = np.unique(H.delta, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(first.size)
    return Coloring(H.cols, tuple((rank[inverse] + 1).tolist()))


def out_neighborhood(Lj: LogicalMatrix, S: Iterable[int]) -> FrozenSet[int]:
    """Successors of ``S`` in the transition graph of ``Lj``."""
    vertices = np.fromiter(S, dtype=np.int64)
    if vertices.size == 0:
        return frozenset()
    if vertices.min() < 1 or vertices.max() > Lj.cols:
        raise AnalysisError(f"vertex out of range 1..{Lj.cols}")
    return frozenset(Lj.delta[vertices - 1].tolist())


def edge_list(Lj: LogicalMatrix) -> Tuple[Tuple[int, int], ...]:
    """``(q, Lj[q])`` for every vertex ``q``."""
    return tuple((q, int(k)) for q, k in enumerate(Lj.delta.tolist(), start=1))


class PevpClause(StrEnum):
    EQUAL_SIZE = 'equal_size'
    CLOSURE = 'closure'
    COLOR = 'color'


@dataclass(frozen=True)
class PevpCheck:
    """Outcome of :func:`is_cc_pevp`; falsy on failure, with the violated clause and witnesses."""

    ok: bool
    clause: Optional[PevpClause] = None
    block: Optional[Block] = None
    graph: Optional[int] = None
    witnesses: Tuple[int, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "common concolorous perfect equal vertex partition"
        block = '{' + ','.join(map(str, self.block or ())) + '}'
        if self.clause is PevpClause.EQUAL_SIZE:
            return f"block {block} has size {len(self.block or ())}, sizes differ"
        if self.clause is PevpClause.CLOSURE:
            return (f"successors of block {block} under input {self.graph} "
                    f"span blocks containing {list(self.witnesses)}")
        return f"block {block} mixes colours at vertices {list(self.witnesses)}"


def is_cc_pevp(S: Partition, Ljs: Sequence[LogicalMatrix], H: LogicalMatrix) -> PevpCheck:
    """Check equal block sizes, forward closure under every ``L_j``, and monochromatic blocks."""
    for j, Lj in enumerate(Ljs, start=1):
        if Lj.shape != (S.universe_size, S.universe_size):
            raise AnalysisError(f"transition block {j} is {Lj.rows}x{Lj.cols}, "
                                f"expected {S.universe_size}x{S.universe_size}")
    if H.cols != S.universe_size:
        raise AnalysisError(f"H has {H.cols} columns, expected {S.universe_size}")

    size = S.universe_size // len(S)
    for block in S.blocks:
        if len(block) != size:
            return PevpCheck(False, PevpClause.EQUAL_SIZE, block)

    labels = S.labels()
    for j, Lj in enumerate(Ljs, start=1):
        for block in S.blocks:
            successors = Lj.delta[np.asarray(block) - 1]
            hit = labels[successors - 1]
            if (hit != hit[0]).any():
                other = int(successors[np.argmax(hit != hit[0])])
                return PevpCheck(False, PevpClause.CLOSURE, block, j, (int(successors[0]), other))

    colors = H.delta
    for block in S.blocks:
        shades = colors[np.asarray(block) - 1]
        if (shades != shades[0]).any():
            other = block[int(np.argmax(shades != shades[0]))]
            return PevpCheck(False, PevpClause.COLOR, block, None, (block[0], other))
    return PevpCheck(True)

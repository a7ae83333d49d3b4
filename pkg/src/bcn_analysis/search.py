"""Search for common concolorous perfect equal vertex partitions.

The main search is congruence-closure backtracking: merging two vertices forces the merge of
their successors under every input, and a merge is refused when it crosses a block of the
observability partition or would grow a class past the target block size. The brute-force
enumeration below it serves as the reference it is tested against.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from typing import Iterator, List, Optional, Set, Tuple

from bcn_model import BCN, blocks

from .errors import AnalysisError, InvariantViolation
from .observability import obs_partition
from .partition import Block, Partition, color_classes, is_cc_pevp

logger = logging.getLogger(__name__)


class SearchMode(StrEnum):
    FIRST = 'first'
    ALL = 'all'


class UndoableUnionFind:
    """Union by size without path compression, so every union can be rolled back."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.trail: List[int] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union_roots(self, ra: int, rb: int) -> None:
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.trail.append(rb)

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            child = self.trail.pop()
            root = self.parent[child]
            self.size[root] -= self.size[child]
            self.parent[child] = child

    def labels(self) -> List[int]:
        return [self.find(x) for x in range(len(self.parent))]


@dataclass
class _ChoicePoint:
    vertex: int
    partners: List[int]
    index: int
    mark: int


class CongruenceSearch:
    """Backtracking over merges of vertex classes (0-based vertices internally)."""

    def __init__(self, bcn: BCN, d: int, coarse: Partition):
        self.count = bcn.state_count
        self.capacity = 2 ** d
        self.successors = [(Lj.delta - 1).tolist() for Lj in blocks(bcn)]
        self.coarse_label = coarse.labels().tolist()
        self.coarse_members = [[q - 1 for q in block] for block in coarse.blocks]
        self.uf = UndoableUnionFind(self.count)
        self.branches = 0

    def merge(self, a: int, b: int) -> bool:
        """Merge the classes of ``a`` and ``b`` plus everything the merge forces."""
        uf, capacity, label = self.uf, self.capacity, self.coarse_label
        work = [(a, b)]
        while work:
            x, y = work.pop()
            rx, ry = uf.find(x), uf.find(y)
            if rx == ry:
                continue
            if label[x] != label[y] or uf.size[rx] + uf.size[ry] > capacity:
                return False
            uf.union_roots(rx, ry)
            for succ in self.successors:
                work.append((succ[x], succ[y]))
        return True

    def first_open(self, start: int) -> Optional[int]:
        """Smallest vertex from ``start`` on whose class is still below capacity."""
        uf = self.uf
        for x in range(start, self.count):
            if uf.size[uf.find(x)] < self.capacity:
                return x
        return None

    def partners(self, v: int, floor: int = -1) -> List[int]:
        """Minimum vertices above ``floor`` of the classes ``v`` may join, ascending.

        While one class is being filled its partners are taken in ascending order, so a
        block is assembled once instead of once per ordering of its parts.
        """
        uf = self.uf
        rv = uf.find(v)
        room = self.capacity - uf.size[rv]
        seen = {rv}
        found = []
        for x in self.coarse_members[self.coarse_label[v]]:
            r = uf.find(x)
            if r in seen:
                continue
            seen.add(r)
            if x > floor and uf.size[r] <= room:
                found.append(x)
        return found

    def current_partition(self) -> Partition:
        return Partition.from_labels(self.uf.labels())

    def run(self, mode: SearchMode) -> List[Partition]:
        solutions: List[Partition] = []
        seen: Set[Partition] = set()

        def record() -> bool:
            partition = self.current_partition()
            if partition not in seen:
                seen.add(partition)
                solutions.append(partition)
            return mode is SearchMode.FIRST

        stack: List[_ChoicePoint] = []
        v = self.first_open(0)
        if v is None:
            record()
            return solutions
        stack.append(_ChoicePoint(v, self.partners(v), 0, self.uf.mark()))
        while stack:
            point = stack[-1]
            self.uf.undo(point.mark)
            if point.index == len(point.partners):
                stack.pop()
                continue
            partner = point.partners[point.index]
            point.index += 1
            self.branches += 1
            if not self.merge(point.vertex, partner):
                continue
            v = self.first_open(point.vertex)
            if v is None:
                if record():
                    break
                continue
            floor = partner if v == point.vertex else -1
            stack.append(_ChoicePoint(v, self.partners(v, floor), 0, self.uf.mark()))
        return sorted(solutions, key=lambda p: p.blocks)


def search_cc_pevp(bcn: BCN, d: int, mode: str = SearchMode.FIRST,
                   coarse: Optional[Partition] = None) -> List[Partition]:
    """Partitions with block size ``2^d`` that pass :func:`is_cc_pevp`.

    ``mode='all'`` returns every one, canonically ordered; ``mode='first'`` returns the
    canonically smallest (depth-first exploration in ascending partner order reaches it first).
    ``coarse`` defaults to the observability partition, which every solution refines.
    """
    mode = SearchMode(mode)
    if not 0 <= d <= bcn.n:
        raise AnalysisError(f"order {d} outside 0..{bcn.n}")
    coarse = coarse if coarse is not None else obs_partition(bcn)
    if any(size % 2 ** d for size in coarse.block_sizes()):
        logger.info("Order %d infeasible: block sizes %s", d, coarse.block_sizes())
        return []
    search = CongruenceSearch(bcn, d, coarse)
    found = search.run(mode)
    logger.info("Search at order %d (%s): %d branches, %d partitions",
                d, mode, search.branches, len(found))
    if __debug__:
        Ljs = blocks(bcn)
        for partition in found:
            if not is_cc_pevp(partition, Ljs, bcn.H):
                raise InvariantViolation(f"search produced an invalid partition {partition}")
    return found


def _split_block(block: Block, size: int) -> Iterator[Tuple[Block, ...]]:
    """All ways to cut one block into parts of ``size``, parts led by their minimum."""
    if not block:
        yield ()
        return
    head, rest = block[0], block[1:]
    for companions in itertools.combinations(rest, size - 1):
        remaining = tuple(v for v in rest if v not in companions)
        for tail in _split_block(remaining, size):
            yield ((head,) + companions,) + tail


def count_equal_partitions(within: Partition, size: int) -> int:
    """How many equal partitions with parts of ``size`` refine ``within``."""
    total = 1
    for k in within.block_sizes():
        if k % size:
            return 0
        parts = k // size
        total *= math.factorial(k) // (math.factorial(size) ** parts * math.factorial(parts))
    return total


def enumerate_equal_partitions(within: Partition, size: int) -> Iterator[Partition]:
    """Every partition into parts of ``size`` whose parts lie inside blocks of ``within``."""
    if size < 1 or any(k % size for k in within.block_sizes()):
        return
    for pieces in itertools.product(*(_split_block(b, size) for b in within.blocks)):
        yield Partition(within.universe_size, tuple(part for piece in pieces for part in piece))


def exhaustive_cc_pevps(bcn: BCN, d: int, within: Optional[Partition] = None) -> List[Partition]:
    """Check every equal partition of block size ``2^d`` refining ``within``.

    ``within`` defaults to the output colouring. Cost grows factorially; keep ``n`` small.
    """
    within = within if within is not None else color_classes(bcn.H).partition()
    Ljs = blocks(bcn)
    found = [p for p in enumerate_equal_partitions(within, 2 ** d) if is_cc_pevp(p, Ljs, bcn.H)]
    logger.debug("Exhaustive check at order %d: %d partitions", d, len(found))
    return sorted(found, key=lambda p: p.blocks)

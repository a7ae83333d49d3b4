"""Maximum decomposition with respect to outputs.

Given a partition of the states into ``2^s`` equal, forward-closed, monochromatic blocks,
the transformation ``z = T x`` puts the block label into the first ``s`` coordinates. Those
coordinates then evolve on their own and determine the output:
``Q L_i = G_1i Q`` and ``H = M Q`` with ``Q = (I_{2^s} ⊗ 1^T_{2^{n-s}}) T``.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from bcn_model import BCN, DecomposedBCN, blocks, transform
from stp_core import LogicalMatrix, RationalMatrix, identity, kron, mul_transpose, ones_row

from .errors import AnalysisError, InvariantViolation
from .observability import obs_partition
from .partition import Partition
from .search import SearchMode, search_cc_pevp

logger = logging.getLogger(__name__)


def _log2_exact(value: int, what: str) -> int:
    if value < 1 or value & (value - 1):
        raise AnalysisError(f"{what} must be a power of two, got {value}")
    return value.bit_length() - 1


def max_feasible_order(C: Partition) -> int:
    """Largest ``d`` such that ``2^d`` divides every block size of ``C``."""
    g = math.gcd(*C.block_sizes())
    return (g & -g).bit_length() - 1


def projection(n: int, s: int) -> LogicalMatrix:
    """``I_{2^s} ⊗ 1^T_{2^(n-s)}``: keeps the first ``s`` coordinates."""
    return kron(identity(2 ** s), ones_row(2 ** (n - s)))


def complement_projection(n: int, s: int) -> LogicalMatrix:
    """``1^T_{2^s} ⊗ I_{2^(n-s)}``: keeps the last ``n - s`` coordinates."""
    return kron(ones_row(2 ** s), identity(2 ** (n - s)))


def q_from_partition(S: Partition) -> LogicalMatrix:
    """Label each vertex with the canonical number (1-based) of its block."""
    if not S.is_equal():
        raise AnalysisError(f"blocks of {S} differ in size")
    _log2_exact(len(S.blocks[0]), "block size")
    return LogicalMatrix(len(S), S.labels() + 1)


def t_from_q(Q: LogicalMatrix) -> LogicalMatrix:
    """A permutation ``T`` with ``(I ⊗ 1^T) T = Q``.

    Vertices with label ``l`` receive ``z = (l-1) 2^(n-s) + 1, + 2, ...`` in ascending order.
    """
    _log2_exact(Q.rows, "row count of Q")
    _log2_exact(Q.cols, "column count of Q")
    per = Q.cols // Q.rows
    counts = np.bincount(Q.delta - 1, minlength=Q.rows)
    if (counts != per).any():
        label = int(np.argmax(counts != per)) + 1
        raise AnalysisError(f"Q is unbalanced: label {label} appears {int(counts[label - 1])} "
                            f"times, expected {per}")
    order = np.argsort(Q.delta, kind='stable')
    delta = np.empty(Q.cols, dtype=np.int64)
    delta[order] = np.arange(1, Q.cols + 1)
    return LogicalMatrix(Q.cols, delta)


def _check_transformation(bcn: BCN, T: LogicalMatrix, s: int) -> None:
    if T.shape != (bcn.state_count, bcn.state_count):
        raise AnalysisError(f"T must be {bcn.state_count}x{bcn.state_count}, got {T.rows}x{T.cols}")
    if not T.is_permutation():
        raise AnalysisError("T must be a permutation matrix")
    if not 0 <= s <= bcn.n:
        raise AnalysisError(f"s={s} outside 0..{bcn.n}")


@dataclass(frozen=True)
class QuotientCheck:
    """One of the quotients ``A Q^T / 2^(n-s)`` with ``A`` either ``Q L_i`` or ``H``."""

    name: str
    A: LogicalMatrix = field(repr=False)
    Q: LogicalMatrix = field(repr=False)
    result: Optional[LogicalMatrix] = None
    witness: Optional[int] = None

    @property
    def logical(self) -> bool:
        return self.result is not None

    def exact(self) -> RationalMatrix:
        """Dense exact quotient; its size is ``rows(A) x 2^s``."""
        scale = self.Q.cols // self.Q.rows
        return mul_transpose(self.A, self.Q).scaled(Fraction(1, scale))


def quotient(name: str, A: LogicalMatrix, Q: LogicalMatrix) -> QuotientCheck:
    """``A Q^T / 2^(n-s)`` is logical iff ``A`` is constant on every label class of ``Q``."""
    per = Q.cols // Q.rows
    targets = A.delta[np.argsort(Q.delta, kind='stable')].reshape(Q.rows, per)
    mixed = (targets != targets[:, :1]).any(axis=1)
    if mixed.any():
        return QuotientCheck(name, A, Q, None, int(np.argmax(mixed)) + 1)
    return QuotientCheck(name, A, Q, LogicalMatrix(A.rows, targets[:, 0]))


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    s: int
    Q: LogicalMatrix
    quotients: Tuple[QuotientCheck, ...]

    @property
    def failures(self) -> Tuple[QuotientCheck, ...]:
        return tuple(q for q in self.quotients if not q.logical)

    @property
    def G1_blocks(self) -> Tuple[LogicalMatrix, ...]:
        return tuple(q.result for q in self.quotients[:-1])

    @property
    def M(self) -> Optional[LogicalMatrix]:
        return self.quotients[-1].result

    def __bool__(self) -> bool:
        return self.ok


def check_projection_autonomy(bcn: BCN, T: LogicalMatrix, s: int,
                              G1_blocks: Tuple[LogicalMatrix, ...], M: LogicalMatrix) -> bool:
    """In ``z`` coordinates the first ``s`` coordinates update without the rest, and ``y`` reads only them."""
    moved = transform(bcn, T)
    P = projection(bcn.n, s)
    for Lj, G1j in zip(blocks(moved), G1_blocks):
        if P @ Lj != G1j @ P:
            return False
    return moved.H == M @ P


def verify_decomposition(bcn: BCN, T: LogicalMatrix, s: int) -> VerificationReport:
    """Test whether ``T`` decomposes ``bcn`` keeping ``s`` coordinates.

    Passes iff every ``Q L_i Q^T / 2^(n-s)`` and ``H Q^T / 2^(n-s)`` is logical. On success the
    identities ``Q L_i = G_1i Q``, ``H = M Q`` and the autonomy of the projection are asserted too.
    """
    _check_transformation(bcn, T, s)
    Q = projection(bcn.n, s) @ T
    checks = [quotient(f"G1[{i}]", Q @ Li, Q) for i, Li in enumerate(blocks(bcn), start=1)]
    checks.append(quotient("M", bcn.H, Q))
    report = VerificationReport(all(c.logical for c in checks), s, Q, tuple(checks))
    if not report.ok:
        logger.info("Verification failed at s=%d: %s", s, ', '.join(c.name for c in report.failures))
        return report

    for Li, G1i in zip(blocks(bcn), report.G1_blocks):
        if Q @ Li != G1i @ Q:
            raise InvariantViolation("Q L_i differs from G_1i Q although the quotient is logical")
    if bcn.H != report.M @ Q:
        raise InvariantViolation("H differs from M Q although the quotient is logical")
    if not check_projection_autonomy(bcn, T, s, report.G1_blocks, report.M):
        raise InvariantViolation("retained coordinates depend on the dropped ones after transformation")
    return report


def extract_subsystems(bcn: BCN, T: LogicalMatrix, s: int) -> DecomposedBCN:
    report = verify_decomposition(bcn, T, s)
    if not report.ok:
        raise AnalysisError(f"quotient {report.failures[0].name} is not logical; "
                            f"T does not decompose the network at s={s}")
    G2 = complement_projection(bcn.n, s) @ transform(bcn, T).L
    return DecomposedBCN(s=s, n=bcn.n, m=bcn.m, p=bcn.p,
                         G1_blocks=report.G1_blocks, G2=G2, M=report.M,
                         input_names=bcn.input_names, output_names=bcn.output_names)


@dataclass(frozen=True)
class DecompositionResult:
    """Outcome of the maximum decomposition; ``order == 0`` means undecomposable."""

    bcn: BCN = field(repr=False)
    coarse: Partition
    order: int
    partition: Optional[Partition]
    Q: LogicalMatrix
    T: LogicalMatrix
    decomposed: DecomposedBCN
    alternatives: Tuple[Partition, ...] = ()

    @property
    def s(self) -> int:
        return self.bcn.n - self.order

    @property
    def is_decomposable(self) -> bool:
        return self.order > 0


def decompose_with(bcn: BCN, S: Partition, coarse: Partition,
                   alternatives: Tuple[Partition, ...] = ()) -> DecompositionResult:
    """Build ``Q``, ``T`` and the subsystems from one partition."""
    Q = q_from_partition(S)
    T = t_from_q(Q)
    s = _log2_exact(len(S), "block count")
    decomposed = extract_subsystems(bcn, T, s)
    return DecompositionResult(bcn, coarse, bcn.n - s, S, Q, T, decomposed, tuple(alternatives))


def trivial_decomposition(bcn: BCN, coarse: Partition) -> DecompositionResult:
    """Order 0: ``T = I`` and every coordinate retained."""
    T = identity(bcn.state_count)
    decomposed = DecomposedBCN(
        s=bcn.n, n=bcn.n, m=bcn.m, p=bcn.p,
        G1_blocks=tuple(blocks(bcn)),
        G2=ones_row(bcn.L.cols),
        M=bcn.H,
        input_names=bcn.input_names,
        output_names=bcn.output_names,
    )
    return DecompositionResult(bcn, coarse, 0, None, T, T, decomposed)


def decompose_at_order(bcn: BCN, d: int, find_all: bool = True,
                       coarse: Optional[Partition] = None) -> Optional[DecompositionResult]:
    """Decomposition of exactly order ``d``, or ``None`` when no partition of that order exists."""
    coarse = coarse if coarse is not None else obs_partition(bcn)
    if d == 0:
        return trivial_decomposition(bcn, coarse)
    found = search_cc_pevp(bcn, d, SearchMode.ALL if find_all else SearchMode.FIRST, coarse)
    if not found:
        return None
    return decompose_with(bcn, found[0], coarse, tuple(found[1:]))


def max_decomposition(bcn: BCN, find_all: bool = True) -> DecompositionResult:
    """Try orders from the largest feasible one downward and stop at the first hit."""
    coarse = obs_partition(bcn)
    d_max = max_feasible_order(coarse)
    logger.info("Maximum feasible order %d (observability blocks %s)", d_max, coarse.block_sizes())
    for d in range(d_max, 0, -1):
        result = decompose_at_order(bcn, d, find_all, coarse)
        if result is not None:
            logger.info("Decomposable of order %d with %d alternative partition(s)",
                        d, len(result.alternatives))
            return result
    logger.info("Undecomposable with respect to outputs")
    return trivial_decomposition(bcn, coarse)

"""One-sided regularity test for the largest unobservable subspace.

Two transformations ``T`` and ``T2`` of the same order give
``R = 2^-s (1^T ⊗ I) T T2^T (1 ⊗ I)``. If the unobservable subspace were regular, ``R`` would
be logical, so a non-logical ``R`` proves it is not regular. A logical ``R`` proves nothing.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Tuple

from bcn_model import BCN
from stp_core import LogicalMatrix, RationalMatrix, mul_transpose

from .decomposition import DecompositionResult, complement_projection, q_from_partition, t_from_q
from .errors import AnalysisError
from .partition import Partition

logger = logging.getLogger(__name__)


class Verdict(StrEnum):
    NOT_REGULAR = 'NotRegular'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class RegularityReport:
    R: RationalMatrix
    r_is_logical: bool
    verdict: Verdict

    def describe(self) -> str:
        if self.verdict is Verdict.NOT_REGULAR:
            return "R is not logical: the largest unobservable subspace is not regular"
        return "R is logical: the test cannot decide regularity"


def regularity_test(T: LogicalMatrix, T2: LogicalMatrix, s: int) -> RegularityReport:
    if T.shape != T2.shape or T.rows != T.cols:
        raise AnalysisError(f"T and T2 must be equal square matrices, got {T.shape} and {T2.shape}")
    if not (T.is_permutation() and T2.is_permutation()):
        raise AnalysisError("T and T2 must be permutation matrices")
    size = T.rows
    if size & (size - 1):
        raise AnalysisError(f"T must have 2^n rows, got {size}")
    n = size.bit_length() - 1
    if not 0 <= s <= n:
        raise AnalysisError(f"s={s} outside 0..{n}")
    P = complement_projection(n, s)
    R = mul_transpose(P @ T, P @ T2).scaled(Fraction(1, 2 ** s))
    logical = R.is_logical()
    verdict = Verdict.INCONCLUSIVE if logical else Verdict.NOT_REGULAR
    logger.debug("Regularity R=%s, verdict %s", R.render(), verdict)
    return RegularityReport(R, logical, verdict)


@dataclass(frozen=True)
class RegularityScan:
    """The test run between the chosen ``T`` and the ``T`` of every alternative partition."""

    pairs: Tuple[Tuple[Partition, LogicalMatrix, RegularityReport], ...]

    @property
    def verdict(self) -> Verdict:
        if any(report.verdict is Verdict.NOT_REGULAR for _, _, report in self.pairs):
            return Verdict.NOT_REGULAR
        return Verdict.INCONCLUSIVE


def scan_regularity(bcn: BCN, result: DecompositionResult) -> RegularityScan:
    if bcn.n != result.bcn.n:
        raise AnalysisError("decomposition result belongs to a different network")
    pairs = []
    for alternative in result.alternatives:
        T2 = t_from_q(q_from_partition(alternative))
        pairs.append((alternative, T2, regularity_test(result.T, T2, result.s)))
    scan = RegularityScan(tuple(pairs))
    logger.info("Regularity scan over %d alternative(s): %s", len(pairs), scan.verdict)
    return scan

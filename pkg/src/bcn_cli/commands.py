"""Command implementations: load a model, run one analysis, return a report."""

import logging
import re
from pathlib import Path
from typing import List, Optional, Sequence, Union

from bcn_analysis import (
    AnalysisError,
    DecompositionResult,
    RegularityReport,
    RegularityScan,
    decompose_at_order,
    edge_list,
    exhaustive_cc_pevps,
    is_observable_columns,
    max_decomposition,
    max_feasible_order,
    obs_partition,
    obs_rows,
    regularity_test,
    scan_regularity,
    undecomposable_by_parity,
    verify_decomposition,
)
from bcn_model import BCN, blocks, simulate
from stp_core import LogicalMatrix, index_to_state

from .config import AnalysisConfig
from .model_file import load_model, matrix_payload
from .reports import (
    ConvertReport,
    DecomposeReport,
    ObservabilityRowModel,
    ObsmatReport,
    QuotientModel,
    RegularityPairModel,
    RegularityReportModel,
    RegularityScanModel,
    SimulateReport,
    VerifyReport,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 4
EXACT_QUOTIENT_MAX_S = 6
INDEX_LIST_PATTERN = re.compile(r'^\s*(?:δ_?\d+)?\s*\[?(?P<body>[\d,\s]*)\]?\s*$')


def parse_index_list(text: str) -> List[int]:
    """``"3,6,1,8"``, ``"[3 6 1 8]"`` or ``"δ_8[3,6,1,8]"`` as a list of ints."""
    match = INDEX_LIST_PATTERN.match(text)
    if not match:
        raise ValueError(f"expected a list of indices such as '3,6,1,8', got '{text}'")
    values = [int(v) for v in re.split(r'[\s,]+', match.group('body').strip()) if v]
    if not values:
        raise ValueError(f"empty index list '{text}'")
    return values


def _permutation(bcn: BCN, values: Sequence[int], what: str) -> LogicalMatrix:
    if sorted(values) != list(range(1, bcn.state_count + 1)):
        raise AnalysisError(f"{what} must list each of 1..{bcn.state_count} exactly once")
    return LogicalMatrix(bcn.state_count, values)


def _regularity_pair(partition, T2: LogicalMatrix, report: RegularityReport) -> RegularityPairModel:
    return RegularityPairModel(
        partition=[list(b) for b in partition.blocks],
        T2=list(T2.indices),
        R=report.R.render(),
        R_numerators=report.R.numerators.tolist(),
        R_denominator=report.R.denominator,
        r_is_logical=report.r_is_logical,
        verdict=str(report.verdict),
    )


def _scan_model(scan: RegularityScan) -> RegularityScanModel:
    return RegularityScanModel(
        verdict=str(scan.verdict),
        pairs=[_regularity_pair(p, T2, r) for p, T2, r in scan.pairs],
    )


class CommandRunner:
    """Runs the commands against model files under one configuration."""

    def __init__(self, config: AnalysisConfig):
        self.config = config

    def load(self, path: Union[str, Path]) -> BCN:
        return load_model(path, self.config.max_n)

    def convert(self, path: Union[str, Path]) -> ConvertReport:
        return ConvertReport(**matrix_payload(self.load(path)))

    def obsmat(self, path: Union[str, Path]) -> ObsmatReport:
        bcn = self.load(path)
        matrix = obs_rows(bcn, max_rows=self.config.max_rows)
        C = obs_partition(bcn, matrix)
        return ObsmatReport(
            n=bcn.n, m=bcn.m, p=bcn.p,
            rows=[ObservabilityRowModel(word=list(r.word), row=list(r.row.indices)) for r in matrix.rows],
            r_star=matrix.r_star,
            partition=[list(b) for b in C.blocks],
            observable_columns=is_observable_columns(bcn, C),
            undecomposable_by_parity=undecomposable_by_parity(C),
            max_feasible_order=max_feasible_order(C),
        )

    def decompose(self, path: Union[str, Path], order: Optional[int] = None,
                  list_all: bool = False, regularity: bool = False,
                  edges: bool = False, exhaustive: bool = False) -> DecomposeReport:
        bcn = self.load(path)
        find_all = list_all or regularity
        if order is None:
            result = max_decomposition(bcn, find_all=find_all)
            verdict = (f"decomposable with respect to outputs of order {result.order}"
                       if result.is_decomposable else "undecomposable with respect to outputs")
        else:
            if not 0 <= order <= bcn.n:
                raise AnalysisError(f"order {order} outside 0..{bcn.n}")
            found = decompose_at_order(bcn, order, find_all)
            if found is None:
                result = decompose_at_order(bcn, 0)
                verdict = f"no decomposition of order {order}"
            else:
                result = found
                verdict = f"decomposition of order {order}"
        report = self._decompose_report(bcn, result, verdict, order, list_all)
        if regularity:
            report.regularity = _scan_model(scan_regularity(bcn, result))
        if edges:
            report.edges = [list(edge_list(Lj)) for Lj in blocks(bcn)]
        if exhaustive:
            report.exhaustive = self._exhaustive(bcn, result)
        return report

    def _decompose_report(self, bcn: BCN, result: DecompositionResult, verdict: str,
                          requested: Optional[int], list_all: bool) -> DecomposeReport:
        decomposed = result.decomposed
        return DecomposeReport(
            n=bcn.n, m=bcn.m, p=bcn.p,
            observability_partition=[list(b) for b in result.coarse.blocks],
            requested_order=requested,
            order=result.order,
            s=result.s,
            decomposable=result.is_decomposable,
            verdict=verdict,
            partition=[list(b) for b in result.partition.blocks] if result.partition is not None else None,
            Q=list(result.Q.indices),
            T=list(result.T.indices),
            G1=[list(b.indices) for b in decomposed.G1_blocks],
            G2=list(decomposed.G2.indices),
            M=list(decomposed.M.indices),
            equations=decomposed.to_equations(),
            alternative_count=len(result.alternatives),
            alternatives=[[list(b) for b in alt.blocks] for alt in result.alternatives] if list_all else [],
        )

    def _exhaustive(self, bcn: BCN, result: DecompositionResult) -> List[List[List[int]]]:
        if bcn.n > EXHAUSTIVE_MAX_N:
            raise AnalysisError(f"exhaustive check is limited to n <= {EXHAUSTIVE_MAX_N}, got n={bcn.n}")
        if not result.is_decomposable:
            return []
        found = exhaustive_cc_pevps(bcn, result.order)
        return [[list(b) for b in p.blocks] for p in found]

    def verify(self, path: Union[str, Path], T_text: str, s: int) -> VerifyReport:
        bcn = self.load(path)
        T = _permutation(bcn, parse_index_list(T_text), "T")
        report = verify_decomposition(bcn, T, s)
        quotients = []
        for check in report.quotients:
            exact = None
            if not check.logical and s <= EXACT_QUOTIENT_MAX_S:
                exact = check.exact().render()
            quotients.append(QuotientModel(
                name=check.name,
                rows=check.A.rows,
                logical=check.logical,
                result=list(check.result.indices) if check.logical else None,
                witness_label=check.witness,
                exact=exact,
            ))
        return VerifyReport(n=bcn.n, s=s, T=list(T.indices), Q=list(report.Q.indices),
                            passed=report.ok, quotients=quotients)

    def simulate(self, path: Union[str, Path], x0: int, inputs: Optional[Sequence[int]] = None,
                 steps: Optional[int] = None, bits: bool = False) -> SimulateReport:
        bcn = self.load(path)
        if steps is not None and steps < 0:
            raise AnalysisError(f"steps must be >= 0, got {steps}")
        if inputs is None:
            inputs = [1] * (steps or 0)
        trajectory = simulate(bcn, x0, list(inputs))
        report = SimulateReport(n=bcn.n, p=bcn.p, x0=x0, inputs=list(inputs),
                                states=list(trajectory.states), outputs=list(trajectory.outputs))
        if bits:
            report.state_bits = [index_to_state(x, bcn.n).render() for x in trajectory.states]
            report.output_bits = [index_to_state(y, bcn.p).render() for y in trajectory.outputs]
        return report

    def regularity(self, path: Union[str, Path], T1_text: str, T2_text: str, s: int) -> RegularityReportModel:
        bcn = self.load(path)
        T1 = _permutation(bcn, parse_index_list(T1_text), "T1")
        T2 = _permutation(bcn, parse_index_list(T2_text), "T2")
        for name, T in (("T1", T1), ("T2", T2)):
            check = verify_decomposition(bcn, T, s)
            if not check.ok:
                raise AnalysisError(f"{name} does not decompose the network at s={s}: "
                                    f"quotient {check.failures[0].name} is not logical")
        report = regularity_test(T1, T2, s)
        return RegularityReportModel(
            s=s, T1=list(T1.indices), T2=list(T2.indices),
            R=report.R.render(),
            R_numerators=report.R.numerators.tolist(),
            R_denominator=report.R.denominator,
            r_is_logical=report.r_is_logical,
            verdict=str(report.verdict),
            explanation=report.describe(),
        )

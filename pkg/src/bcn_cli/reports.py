"""Structured reports printed by the command-line tool.

Every report renders either as JSON (``model_dump_json``, fixed field order, no timestamps)
or as plain text for people. Delta indices are 1-based everywhere.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

SCHEMA_VERSION = '1.0'

BlockList = List[List[int]]


def delta_text(rows: int, indices: Sequence[int]) -> str:
    return f"δ_{rows}[{','.join(str(v) for v in indices)}]"


def blocks_text(blocks: Sequence[Sequence[int]]) -> str:
    return '{' + ', '.join('{' + ','.join(str(v) for v in b) + '}' for b in blocks) + '}'


def word_text(word: Sequence[int]) -> str:
    return ''.join(str(j) for j in word) if word else 'ε'


def _block_lines(name: str, rows: int, blocks: Sequence[Sequence[int]]) -> List[str]:
    if len(blocks) == 1:
        return [f"{name} = {delta_text(rows, blocks[0])}"]
    return [f"{name}_{j} = {delta_text(rows, b)}" for j, b in enumerate(blocks, start=1)]


class Report(BaseModel):
    """Common base: schema version and command name come first in every JSON report."""

    schema_version: str = SCHEMA_VERSION
    command: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary format."""
        return self.model_dump(mode='json')

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def save_to_file(self, file_path: str) -> None:
        """Save the JSON form of the report to a file."""
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(self.to_json() + '\n')

    def summary(self) -> str:
        raise NotImplementedError

    def render_text(self) -> str:
        raise NotImplementedError


class ConvertReport(Report):
    command: str = 'convert'
    n: int
    m: int
    p: int
    L: BlockList
    H: List[int]
    state_names: List[str]
    input_names: List[str]
    output_names: List[str]

    def summary(self) -> str:
        return f"n={self.n}, m={self.m}, p={self.p}"

    def render_text(self) -> str:
        lines = [f"states: {', '.join(self.state_names)}"]
        if self.input_names:
            lines.append(f"inputs: {', '.join(self.input_names)}")
        lines.append(f"outputs: {', '.join(self.output_names)}")
        lines += _block_lines('L', 2 ** self.n, self.L)
        lines.append(f"H = {delta_text(2 ** self.p, self.H)}")
        return '\n'.join(lines)


class ObservabilityRowModel(BaseModel):
    word: List[int]
    row: List[int]


class ObsmatReport(Report):
    command: str = 'obsmat'
    n: int
    m: int
    p: int
    rows: List[ObservabilityRowModel]
    r_star: int
    partition: BlockList
    observable_columns: bool
    undecomposable_by_parity: bool
    max_feasible_order: int

    def summary(self) -> str:
        return (f"{len(self.rows)} rows, C = {blocks_text(self.partition)}, "
                f"max feasible order {self.max_feasible_order}")

    def render_text(self) -> str:
        width = max(len(word_text(r.word)) for r in self.rows)
        lines = [f"observability matrix: {len(self.rows)} distinct rows, r* = {self.r_star}"]
        lines += [f"  {word_text(r.word):<{width}}  {delta_text(2 ** self.p, r.row)}" for r in self.rows]
        lines.append(f"C = {blocks_text(self.partition)}")
        if self.observable_columns:
            lines.append("columns distinct: yes (observable provided the network is globally controllable)")
        else:
            lines.append("columns distinct: no (unobservable)")
        if self.undecomposable_by_parity:
            lines.append("a block of C has odd size: undecomposable with respect to outputs")
        else:
            lines.append(f"all blocks of C even: orders up to {self.max_feasible_order} remain possible")
        return '\n'.join(lines)


class RegularityPairModel(BaseModel):
    partition: BlockList
    T2: List[int]
    R: str
    R_numerators: List[List[int]]
    R_denominator: int
    r_is_logical: bool
    verdict: str


class RegularityScanModel(BaseModel):
    verdict: str
    pairs: List[RegularityPairModel]


class DecomposeReport(Report):
    command: str = 'decompose'
    n: int
    m: int
    p: int
    observability_partition: BlockList
    requested_order: Optional[int] = None
    order: int
    s: int
    decomposable: bool
    verdict: str
    partition: Optional[BlockList] = None
    Q: List[int]
    T: List[int]
    G1: BlockList
    G2: List[int]
    M: List[int]
    equations: str
    alternative_count: int = 0
    alternatives: List[BlockList] = []
    regularity: Optional[RegularityScanModel] = None
    edges: Optional[List[List[Tuple[int, int]]]] = None
    exhaustive: Optional[List[BlockList]] = None

    def summary(self) -> str:
        return self.verdict

    def render_text(self) -> str:
        lines = [self.verdict, f"C = {blocks_text(self.observability_partition)}"]
        if self.partition is not None:
            lines.append(f"S = {blocks_text(self.partition)}")
        lines.append(f"Q = {delta_text(2 ** self.s, self.Q)}")
        lines.append(f"T = {delta_text(2 ** self.n, self.T)}")
        lines += _block_lines('G1', 2 ** self.s, self.G1)
        lines.append(f"G2 = {delta_text(2 ** (self.n - self.s), self.G2)}")
        lines.append(f"M = {delta_text(2 ** self.p, self.M)}")
        lines.append("decomposed equations:")
        lines += ['  ' + line for line in self.equations.splitlines()]
        if self.alternative_count:
            lines.append(f"{self.alternative_count} other partition(s) of the same order:")
            lines += [f"  {blocks_text(alt)}" for alt in self.alternatives]
        if self.regularity is not None:
            lines.append(f"regularity: {self.regularity.verdict}")
            for pair in self.regularity.pairs:
                lines.append(f"  vs {blocks_text(pair.partition)}: R = {pair.R} ({pair.verdict})")
        if self.exhaustive is not None:
            lines.append(f"exhaustive check: {len(self.exhaustive)} partition(s)")
            lines += [f"  {blocks_text(found)}" for found in self.exhaustive]
        if self.edges is not None:
            for j, edges in enumerate(self.edges, start=1):
                lines.append(f"edges under input {j}: " + ' '.join(f"{q}->{k}" for q, k in edges))
        return '\n'.join(lines)


class QuotientModel(BaseModel):
    name: str
    rows: int
    logical: bool
    result: Optional[List[int]] = None
    witness_label: Optional[int] = None
    exact: Optional[str] = None


class VerifyReport(Report):
    command: str = 'verify'
    n: int
    s: int
    T: List[int]
    Q: List[int]
    passed: bool
    quotients: List[QuotientModel]

    def summary(self) -> str:
        state = 'pass' if self.passed else 'fail'
        return f"{state}: T at s={self.s} (order {self.n - self.s})"

    def render_text(self) -> str:
        lines = [self.summary(), f"Q = {delta_text(2 ** self.s, self.Q)}"]
        for q in self.quotients:
            if q.logical:
                lines.append(f"  {q.name}: logical, {delta_text(q.rows, q.result)}")
            else:
                detail = f"  {q.name}: not logical (label {q.witness_label} maps to several targets)"
                if q.exact is not None:
                    detail += f", quotient {q.exact}"
                lines.append(detail)
        return '\n'.join(lines)


class SimulateReport(Report):
    command: str = 'simulate'
    n: int
    p: int
    x0: int
    inputs: List[int]
    states: List[int]
    outputs: List[int]
    state_bits: Optional[List[str]] = None
    output_bits: Optional[List[str]] = None

    def summary(self) -> str:
        return f"{len(self.inputs)} step(s) from x0={self.x0}, final state {self.states[-1]}"

    def render_text(self) -> str:
        lines = [f"{'t':>3}  {'u':>3}  {'x':>6}  {'y':>4}"]
        for t, (x, y) in enumerate(zip(self.states, self.outputs)):
            u = str(self.inputs[t]) if t < len(self.inputs) else '-'
            x_text = self.state_bits[t] if self.state_bits else str(x)
            y_text = self.output_bits[t] if self.output_bits else str(y)
            lines.append(f"{t:>3}  {u:>3}  {x_text:>6}  {y_text:>4}")
        return '\n'.join(lines)


class RegularityReportModel(Report):
    command: str = 'regularity'
    s: int
    T1: List[int]
    T2: List[int]
    R: str
    R_numerators: List[List[int]]
    R_denominator: int
    r_is_logical: bool
    verdict: str
    explanation: str

    def summary(self) -> str:
        return f"{self.verdict}: R = {self.R}"

    def render_text(self) -> str:
        return '\n'.join([f"R = {self.R}", f"verdict: {self.verdict}", self.explanation])

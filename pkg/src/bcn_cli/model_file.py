"""Model files: JSON in equations or matrix form, or ``.bcn`` model text.

Equations form::

    {"states": ["x1", "x2"], "inputs": ["u"], "outputs": ["y"],
     "update": {"x1": "x2 | u", "x2": "x1"}, "output_map": {"y": "x1 ^ x2"}}

Matrix form (1-based delta indices, one ``L`` row per input value)::

    {"n": 2, "m": 0, "p": 1, "L": [[1, 2, 3, 1]], "H": [1, 1, 1, 2]}

Extra keys are ignored, so a ``convert --json`` report loads as a matrix file.
"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from bcn_model import BCN, ModelError, assemble, parse_model_text
from bool_expr import ExprSyntaxError, parse
from stp_core import LogicalMatrix

logger = logging.getLogger(__name__)

TEXT_SUFFIXES = ('.bcn', '.txt')


class ModelFileError(ValueError):
    """Unreadable or invalid model file, with the position of the problem when known."""

    def __init__(self, path: Union[str, Path], message: str,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.path = str(path)
        self.line = line
        self.column = column
        where = self.path
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


class EquationsForm(BaseModel):
    model_config = ConfigDict(extra='ignore')

    states: List[str]
    inputs: List[str] = Field(default_factory=list)
    outputs: List[str]
    update: Dict[str, str]
    output_map: Dict[str, str]

    def to_bcn(self, path: Union[str, Path], max_n: int, source: str = "") -> BCN:
        if len(self.states) > max_n:
            raise ModelFileError(path, f"{len(self.states)} state variables exceed the limit of {max_n}")
        parsed = {}
        for section, equations in (('update', self.update), ('output_map', self.output_map)):
            for name, text in equations.items():
                try:
                    parsed[section, name] = parse(text)
                except ExprSyntaxError as exc:
                    line, column = _expression_location(source, section, name, exc.position)
                    raise ModelFileError(path, f"{section}.{name}: expected {exc.expected}, found {exc.found}",
                                         line, column) from None
        missing = [name for name in self.outputs if name not in self.output_map]
        if missing:
            raise ModelFileError(path, f"output_map has no equation for '{missing[0]}'")
        extra = [name for name in self.output_map if name not in self.outputs]
        if extra:
            raise ModelFileError(path, f"output_map entry '{extra[0]}' is not a declared output")
        updates = [(name, parsed['update', name]) for name in self.update]
        outputs = [(name, parsed['output_map', name]) for name in self.outputs]
        return assemble(updates, outputs, self.states, self.inputs)


class MatrixForm(BaseModel):
    model_config = ConfigDict(extra='ignore')

    n: int = Field(ge=1)
    m: int = Field(ge=0)
    p: int = Field(ge=1)
    L: List[List[int]]
    H: List[int]
    state_names: List[str] = Field(default_factory=list)
    input_names: List[str] = Field(default_factory=list)
    output_names: List[str] = Field(default_factory=list)

    @model_validator(mode='after')
    def _check_shapes(self) -> 'MatrixForm':
        states = 2 ** self.n
        if len(self.L) != 2 ** self.m:
            raise ValueError(f"L needs {2 ** self.m} blocks (one per input value), got {len(self.L)}")
        for j, block in enumerate(self.L, start=1):
            if len(block) != states:
                raise ValueError(f"L block {j} needs {states} entries, got {len(block)}")
            if any(not 1 <= v <= states for v in block):
                raise ValueError(f"L block {j} has an entry outside 1..{states}")
        if len(self.H) != states:
            raise ValueError(f"H needs {states} entries, got {len(self.H)}")
        if any(not 1 <= v <= 2 ** self.p for v in self.H):
            raise ValueError(f"H has an entry outside 1..{2 ** self.p}")
        return self

    def to_bcn(self) -> BCN:
        L = LogicalMatrix.hstack(LogicalMatrix(2 ** self.n, block) for block in self.L)
        return BCN(n=self.n, m=self.m, p=self.p, L=L, H=LogicalMatrix(2 ** self.p, self.H),
                   state_names=tuple(self.state_names),
                   input_names=tuple(self.input_names),
                   output_names=tuple(self.output_names))


def matrix_payload(bcn: BCN) -> Dict[str, Any]:
    """The matrix-form fields of ``bcn``."""
    return {
        'n': bcn.n,
        'm': bcn.m,
        'p': bcn.p,
        'L': [list(block.indices) for block in bcn.L.column_blocks(bcn.input_count)],
        'H': list(bcn.H.indices),
        'state_names': list(bcn.state_names),
        'input_names': list(bcn.input_names),
        'output_names': list(bcn.output_names),
    }


def _format_location(loc) -> str:
    return '.'.join(str(part) for part in loc) or '<root>'


def _expression_location(source: str, section: str, name: str,
                         position: int) -> Tuple[Optional[int], Optional[int]]:
    """Line and column in ``source`` of character ``position`` of the ``section.name`` string.

    Columns are exact only when the expression holds no JSON escapes.
    """
    section_key = re.search(re.escape(json.dumps(section)) + r"\s*:", source)
    if section_key is None:
        return None, None
    entry = re.compile(re.escape(json.dumps(name)) + r"\s*:\s*\"").search(source, section_key.end())
    if entry is None:
        return None, None
    offset = entry.end() + position
    line_start = source.rfind("\n", 0, offset) + 1
    return source.count("\n", 0, offset) + 1, offset - line_start + 1


def _load_json(path: Path, text: str, max_n: int) -> BCN:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFileError(path, f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ModelFileError(path, "top level must be an object")
    has_equations = 'update' in data or 'output_map' in data
    has_matrix = 'L' in data or 'H' in data
    if has_equations == has_matrix:
        raise ModelFileError(path, "give exactly one of the equations form (update, output_map) "
                                   "or the matrix form (n, m, p, L, H)")
    try:
        if has_equations:
            return EquationsForm.model_validate(data).to_bcn(path, max_n, text)
        form = MatrixForm.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise ModelFileError(path, f"{_format_location(error['loc'])}: {error['msg']}") from None
    except ModelError as exc:
        raise ModelFileError(path, str(exc)) from None
    if form.n > max_n:
        raise ModelFileError(path, f"n={form.n} exceeds the limit of {max_n}")
    try:
        return form.to_bcn()
    except ModelError as exc:
        raise ModelFileError(path, str(exc)) from None


def load_model(path: Union[str, Path], max_n: int = 20) -> BCN:
    """Read a model file; any problem surfaces as :class:`ModelFileError`."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ModelFileError(path, f"cannot read file: {exc.strerror or exc}") from None
    if path.suffix in TEXT_SUFFIXES:
        try:
            bcn = parse_model_text(text, max_states=max_n)
        except ExprSyntaxError as exc:
            raise ModelFileError(path, f"expected {exc.expected}, found {exc.found}",
                                 exc.line, exc.position + 1) from None
        except ModelError as exc:
            raise ModelFileError(path, exc.message, exc.line) from None
    else:
        bcn = _load_json(path, text, max_n)
    logger.info("Loaded %s: n=%d, m=%d, p=%d", path, bcn.n, bcn.m, bcn.p)
    return bcn

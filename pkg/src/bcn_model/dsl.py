"""Plain-text model format.

::

    # comments run to end of line
    states: x1, x2, x3
    inputs: u
    outputs: y
    x1' = x3 | u
    x2' = (x1 & !x3) | (!x1 & (x3 <-> u))
    x3' = x3 -> u
    y = (x1 <-> x3) -> (x2 ^ x3)

Header lines are optional. Without them, states follow the order of the update lines,
outputs the order of the output lines, and inputs are the remaining names in order of
first appearance.
"""

import re
from typing import Dict, List, Optional, Sequence, Tuple

from bool_expr import Expr, ExprSyntaxError, parse, to_text

from .errors import ModelError
from .network import BCN, assemble

HEADER_PATTERN = re.compile(r'^\s*(states|inputs|outputs)\s*:(?P<names>.*)$')
EQUATION_PATTERN = re.compile(r"^\s*(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s*(?P<prime>')?\s*=(?P<expr>.*)$")
NAME_PATTERN = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


def _split_names(text: str, line: int) -> List[str]:
    names = [part for part in re.split(r'[\s,]+', text.strip()) if part]
    for name in names:
        if not NAME_PATTERN.fullmatch(name):
            raise ModelError(f"invalid variable name '{name}'", line)
    return names


def _first_appearance(equations: Sequence[Tuple[Expr, str]]) -> List[str]:
    ordered: List[str] = []
    for expr, text in equations:
        names = expr.free_vars()
        for match in NAME_PATTERN.finditer(text):
            name = match.group()
            if name in names and name not in ordered:
                ordered.append(name)
    return ordered


def parse_model_text(text: str, max_states: Optional[int] = None) -> BCN:
    """Parse model text and assemble it; ``max_states`` caps the number of state variables."""
    headers: Dict[str, List[str]] = {}
    updates: List[Tuple[str, Expr]] = []
    outputs: List[Tuple[str, Expr]] = []
    update_texts: List[Tuple[Expr, str]] = []
    seen: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        if not line.strip():
            continue
        header = HEADER_PATTERN.match(line)
        if header:
            key = header.group(1)
            if key in headers:
                raise ModelError(f"'{key}' declared twice", lineno)
            headers[key] = _split_names(header.group('names'), lineno)
            continue
        equation = EQUATION_PATTERN.match(line)
        if not equation:
            raise ModelError("expected 'name' = expr', 'name = expr' or a header line", lineno)
        name, is_update = equation.group('name'), bool(equation.group('prime'))
        key = f"{name}'" if is_update else name
        if key in seen:
            raise ModelError(f"duplicate equation for '{key}' (first on line {seen[key]})", lineno)
        seen[key] = lineno
        try:
            expr = parse(equation.group('expr'))
        except ExprSyntaxError as exc:
            raise exc.at_line(lineno, equation.start('expr')) from None
        if is_update:
            updates.append((name, expr))
            update_texts.append((expr, equation.group('expr')))
        else:
            outputs.append((name, expr))

    state_names = headers.get('states') or [name for name, _ in updates]
    if 'inputs' in headers:
        input_names = headers['inputs']
    else:
        candidates = _first_appearance(update_texts)
        input_names = [name for name in candidates if name not in state_names]
    if max_states is not None and len(state_names) > max_states:
        raise ModelError(f"{len(state_names)} state variables exceed the limit of {max_states}")
    if 'outputs' in headers:
        order = {name: i for i, name in enumerate(headers['outputs'])}
        unknown = [name for name, _ in outputs if name not in order]
        if unknown:
            raise ModelError(f"output equation for undeclared output '{unknown[0]}'")
        missing = [name for name in headers['outputs'] if name not in dict(outputs)]
        if missing:
            raise ModelError(f"missing output equation for '{missing[0]}'")
        outputs.sort(key=lambda item: order[item[0]])
    return assemble(updates, outputs, state_names, input_names)


def format_model_text(state_names: Sequence[str], input_names: Sequence[str],
                     output_names: Sequence[str], updates: Sequence[Expr],
                     outputs: Sequence[Expr]) -> str:
    lines = [f"states: {', '.join(state_names)}"]
    if input_names:
        lines.append(f"inputs: {', '.join(input_names)}")
    lines.append(f"outputs: {', '.join(output_names)}")
    lines.extend(f"{name}' = {to_text(expr)}" for name, expr in zip(state_names, updates))
    lines.extend(f"{name} = {to_text(expr)}" for name, expr in zip(output_names, outputs))
    return '\n'.join(lines) + '\n'

"""Truth tables indexed by the delta index of the packed argument vector."""

from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import UnboundVariableError
from .evaluate import evaluate_columns
from .nodes import And, Const, Expr, Not, Or, Var


def argument_bits(var_count: int) -> List[np.ndarray]:
    """Per-variable boolean columns over all ``2**var_count`` packed indices.

    Entry ``k - 1`` of column ``i`` is the value of variable ``i`` at delta index ``k``;
    the first variable is the outermost factor of the product.
    """
    offsets = np.arange(2 ** var_count, dtype=np.int64)
    return [((offsets >> (var_count - 1 - i)) & 1) == 0 for i in range(var_count)]


@dataclass(frozen=True)
class TruthTable:
    vars: Tuple[str, ...]
    values: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vars', tuple(self.vars))
        object.__setattr__(self, 'values', tuple(bool(v) for v in self.values))
        if len(self.values) != 2 ** len(self.vars):
            raise ValueError(
                f"truth table over {len(self.vars)} variables needs {2 ** len(self.vars)} rows, "
                f"got {len(self.values)}"
            )

    @classmethod
    def from_array(cls, vars: Sequence[str], values: np.ndarray) -> 'TruthTable':
        return cls(tuple(vars), tuple(bool(v) for v in np.asarray(values).tolist()))


def truth_values(expr: Expr, vars: Sequence[str]) -> np.ndarray:
    """Boolean array of ``expr`` over every packed assignment of ``vars``."""
    missing = expr.free_vars() - set(vars)
    if missing:
        raise UnboundVariableError(sorted(missing)[0])
    columns = dict(zip(vars, argument_bits(len(vars))))
    return evaluate_columns(expr, columns, 2 ** len(vars))


def to_truth_table(expr: Expr, vars: Sequence[str]) -> TruthTable:
    return TruthTable.from_array(vars, truth_values(expr, vars))


def _single_literal(table: TruthTable) -> Optional[Expr]:
    for name, bits in zip(table.vars, argument_bits(len(table.vars))):
        column = tuple(bits.tolist())
        if column == table.values:
            return Var(name)
        if tuple(not b for b in column) == table.values:
            return Not(Var(name))
    return None


def table_to_dnf(table: TruthTable) -> Expr:
    """Disjunction of minterms over the true rows.

    Constant tables become ``Const``; a table equal to one literal collapses to it.
    No further minimisation is attempted.
    """
    if not any(table.values):
        return Const(False)
    if all(table.values):
        return Const(True)
    literal = _single_literal(table)
    if literal is not None:
        return literal
    bits = argument_bits(len(table.vars))
    minterms = []
    for k, value in enumerate(table.values):
        if not value:
            continue
        literals = [Var(name) if bool(bits[i][k]) else Not(Var(name))
                    for i, name in enumerate(table.vars)]
        minterms.append(reduce(And, literals))
    return reduce(Or, minterms)

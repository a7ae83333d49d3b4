"""Scalar and vectorised evaluation of expression trees."""

from typing import Mapping

import numpy as np

from .errors import UnboundVariableError
from .nodes import And, BinaryOp, Const, Expr, Iff, Implies, Not, Or, Var, Xor


def evaluate(expr: Expr, assignment: Mapping[str, bool]) -> bool:
    match expr:
        case Var(name=name):
            if name not in assignment:
                raise UnboundVariableError(name)
            return bool(assignment[name])
        case Const(value=value):
            return value
        case Not(operand=operand):
            return not evaluate(operand, assignment)
        case And(left=a, right=b):
            return evaluate(a, assignment) and evaluate(b, assignment)
        case Or(left=a, right=b):
            return evaluate(a, assignment) or evaluate(b, assignment)
        case Xor(left=a, right=b):
            return evaluate(a, assignment) != evaluate(b, assignment)
        case Implies(left=a, right=b):
            return (not evaluate(a, assignment)) or evaluate(b, assignment)
        case Iff(left=a, right=b):
            return evaluate(a, assignment) == evaluate(b, assignment)
    raise TypeError(f"not an expression node: {expr!r}")


def evaluate_columns(expr: Expr, columns: Mapping[str, np.ndarray], size: int) -> np.ndarray:
    """Evaluate over many assignments at once.

    ``columns[name]`` is a boolean array of length ``size`` holding the variable's value in
    each assignment; the result is a boolean array of the same length.
    """
    match expr:
        case Var(name=name):
            if name not in columns:
                raise UnboundVariableError(name)
            return columns[name]
        case Const(value=value):
            return np.full(size, value, dtype=bool)
        case Not(operand=operand):
            return ~evaluate_columns(operand, columns, size)
    if not isinstance(expr, BinaryOp):
        raise TypeError(f"not an expression node: {expr!r}")
    left = evaluate_columns(expr.left, columns, size)
    right = evaluate_columns(expr.right, columns, size)
    match expr:
        case And():
            return left & right
        case Or():
            return left | right
        case Xor():
            return left ^ right
        case Implies():
            return ~left | right
        case Iff():
            return ~(left ^ right)
    raise TypeError(f"not an expression node: {expr!r}")

"""Boolean expression language: parsing, evaluation and truth tables."""

from .errors import ExprSyntaxError, UnboundVariableError
from .nodes import And, BinaryOp, Const, Expr, Iff, Implies, Not, Or, Var, Xor, to_text
from .parser import parse
from .evaluate import evaluate, evaluate_columns
from .truth_table import TruthTable, argument_bits, table_to_dnf, to_truth_table, truth_values

__all__ = [
    'ExprSyntaxError',
    'UnboundVariableError',
    'And',
    'BinaryOp',
    'Const',
    'Expr',
    'Iff',
    'Implies',
    'Not',
    'Or',
    'Var',
    'Xor',
    'to_text',
    'parse',
    'evaluate',
    'evaluate_columns',
    'TruthTable',
    'argument_bits',
    'table_to_dnf',
    'to_truth_table',
    'truth_values',
]

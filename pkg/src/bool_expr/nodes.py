"""Expression tree for the Boolean equation language."""

from dataclasses import dataclass
from typing import FrozenSet


class Expr:
    """Base of all expression nodes."""

    def free_vars(self) -> FrozenSet[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def free_vars(self) -> FrozenSet[str]:
        return frozenset((self.name,))


@dataclass(frozen=True)
class Const(Expr):
    value: bool

    def free_vars(self) -> FrozenSet[str]:
        return frozenset()


@dataclass(frozen=True)
class Not(Expr):
    operand: Expr

    def free_vars(self) -> FrozenSet[str]:
        return self.operand.free_vars()


@dataclass(frozen=True)
class BinaryOp(Expr):
    left: Expr
    right: Expr

    # ASCII operator and binding strength; higher binds tighter
    symbol = ''
    precedence = 0

    def free_vars(self) -> FrozenSet[str]:
        return self.left.free_vars() | self.right.free_vars()


@dataclass(frozen=True)
class And(BinaryOp):
    symbol = '&'
    precedence = 5


@dataclass(frozen=True)
class Xor(BinaryOp):
    symbol = '^'
    precedence = 4


@dataclass(frozen=True)
class Or(BinaryOp):
    symbol = '|'
    precedence = 3


@dataclass(frozen=True)
class Implies(BinaryOp):
    symbol = '->'
    precedence = 2


@dataclass(frozen=True)
class Iff(BinaryOp):
    symbol = '<->'
    precedence = 1


def to_text(expr: Expr) -> str:
    """Render in the ASCII syntax; nested binary operands are always parenthesised
    unless they bind strictly tighter than their parent."""
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Const):
        return '1' if expr.value else '0'
    if isinstance(expr, Not):
        inner = to_text(expr.operand)
        return f"!({inner})" if isinstance(expr.operand, BinaryOp) else f"!{inner}"
    if isinstance(expr, BinaryOp):
        parts = []
        for child in (expr.left, expr.right):
            text = to_text(child)
            if isinstance(child, BinaryOp) and child.precedence <= expr.precedence:
                text = f"({text})"
            parts.append(text)
        return f"{parts[0]} {expr.symbol} {parts[1]}"
    raise TypeError(f"not an expression node: {expr!r}")

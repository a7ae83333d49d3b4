"""Recursive-descent parser.

Grammar, lowest precedence first::

    iff      := implies ('<->' implies)*          left-associative
    implies  := or ('->' implies)?                right-associative
    or       := xor ('|' xor)*
    xor      := and ('^' and)*
    and      := unary ('&' unary)*
    unary    := '!' unary | atom
    atom     := IDENT | 0 | 1 | true | false | '(' iff ')'

Unicode connectives (¬ ∧ ∨ ⊕ ⊻ ∨̄ → ↔) are accepted as aliases.
"""

from typing import List

from .errors import ExprSyntaxError
from .lexer import KEYWORD_CONSTANTS, Token, tokenize
from .nodes import And, Const, Expr, Iff, Implies, Not, Or, Var, Xor


class _Parser:
    def __init__(self, text: str):
        self.tokens: List[Token] = tokenize(text)
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def accept(self, kind: str) -> bool:
        if self.token.kind == kind:
            self.index += 1
            return True
        return False

    def expect(self, kind: str, description: str) -> Token:
        token = self.token
        if token.kind != kind:
            raise ExprSyntaxError(token.position, description, token.describe())
        self.index += 1
        return token

    def parse_all(self) -> Expr:
        expr = self.parse_iff()
        self.expect('END', 'operator or end of input')
        return expr

    def parse_iff(self) -> Expr:
        expr = self.parse_implies()
        while self.accept('IFF'):
            expr = Iff(expr, self.parse_implies())
        return expr

    def parse_implies(self) -> Expr:
        left = self.parse_or()
        if self.accept('IMPLIES'):
            return Implies(left, self.parse_implies())
        return left

    def parse_or(self) -> Expr:
        expr = self.parse_xor()
        while self.accept('OR'):
            expr = Or(expr, self.parse_xor())
        return expr

    def parse_xor(self) -> Expr:
        expr = self.parse_and()
        while self.accept('XOR'):
            expr = Xor(expr, self.parse_and())
        return expr

    def parse_and(self) -> Expr:
        expr = self.parse_unary()
        while self.accept('AND'):
            expr = And(expr, self.parse_unary())
        return expr

    def parse_unary(self) -> Expr:
        if self.accept('NOT'):
            return Not(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Expr:
        token = self.token
        if self.accept('IDENT'):
            return Var(token.text)
        if self.accept('CONST'):
            if token.text in KEYWORD_CONSTANTS:
                return Const(KEYWORD_CONSTANTS[token.text])
            return Const(token.text == '1')
        if self.accept('LPAREN'):
            inner = self.parse_iff()
            self.expect('RPAREN', "')'")
            return inner
        raise ExprSyntaxError(token.position, "identifier, literal, '!' or '('", token.describe())


def parse(text: str) -> Expr:
    """Parse one expression; raises :class:`ExprSyntaxError` with the offending position."""
    return _Parser(text).parse_all()

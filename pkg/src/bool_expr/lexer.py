"""Tokenizer for the Boolean equation language."""

import re
from dataclasses import dataclass
from typing import Iterator, List

from .errors import ExprSyntaxError

# kind -> canonical ASCII spelling for operators
OPERATOR_ALIASES = {
    '<->': 'IFF', '↔': 'IFF',
    '->': 'IMPLIES', '→': 'IMPLIES',
    '∨̄': 'XOR', '⊻': 'XOR', '⊕': 'XOR', '^': 'XOR',
    '|': 'OR', '∨': 'OR',
    '&': 'AND', '∧': 'AND',
    '!': 'NOT', '¬': 'NOT',
    '(': 'LPAREN', ')': 'RPAREN',
}

TOKEN_PATTERN = re.compile(
    r'(?P<space>\s+)'
    r'|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)'
    r'|(?P<number>[0-9]+)'
    r'|(?P<op>' + '|'.join(re.escape(op) for op in sorted(OPERATOR_ALIASES, key=len, reverse=True)) + r')'
)

KEYWORD_CONSTANTS = {'true': True, 'false': False}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int

    def describe(self) -> str:
        if self.kind == 'END':
            return 'end of input'
        return repr(self.text)


def tokenize(text: str) -> List[Token]:
    return list(iter_tokens(text))


def iter_tokens(text: str) -> Iterator[Token]:
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise ExprSyntaxError(pos, 'operator, identifier or literal', repr(text[pos]))
        kind = match.lastgroup
        value = match.group()
        if kind == 'ident':
            if value in KEYWORD_CONSTANTS:
                yield Token('CONST', value, pos)
            else:
                yield Token('IDENT', value, pos)
        elif kind == 'number':
            if value not in ('0', '1'):
                raise ExprSyntaxError(pos, "literal '0' or '1'", repr(value))
            yield Token('CONST', value, pos)
        elif kind == 'op':
            yield Token(OPERATOR_ALIASES[value], value, pos)
        pos = match.end()
    yield Token('END', '', len(text))

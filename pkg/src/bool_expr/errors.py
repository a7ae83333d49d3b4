"""Errors raised while lexing, parsing or evaluating Boolean expressions."""

from typing import Optional


class ExprSyntaxError(ValueError):
    """Malformed expression text.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, position: int, expected: str, found: str, line: Optional[int] = None):
        self.position = position
        self.expected = expected
        self.found = found
        self.line = line
        where = f"{line}:{position + 1}" if line is not None else f"position {position}"
        super().__init__(f"{where}: expected {expected}, found {found}")

    def at_line(self, line: int, column_offset: int = 0) -> 'ExprSyntaxError':
        """Re-anchor the error inside a multi-line document."""
        return ExprSyntaxError(self.position + column_offset, self.expected, self.found, line)


class UnboundVariableError(KeyError):
    """An expression referenced a variable absent from the assignment."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound variable '{name}'")

    def __str__(self) -> str:
        return self.args[0]

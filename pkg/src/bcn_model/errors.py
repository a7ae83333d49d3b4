"""Errors raised while building or operating on a Boolean control network."""

from typing import Optional


class ModelError(ValueError):
    """Invalid model: unknown variable, missing or duplicate equation, bad index."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)

"""Errors raised by the matrix kernel."""


class DimensionError(ValueError):
    """Operands have incompatible or invalid shapes."""


class NotLogicalError(ValueError):
    """A matrix was required to be logical (one 1 per column) but is not."""

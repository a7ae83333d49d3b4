"""Errors raised by the partition, observability and decomposition analyses."""


class AnalysisError(ValueError):
    """Bad analysis input: malformed partition, universe mismatch, unbalanced Q, non-logical quotient."""


class InvariantViolation(RuntimeError):
    """An identity that must hold by construction did not; indicates a bug, not bad input."""

# app/exceptions.py


class StableCharError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class ParseError(StableCharError, ValueError):
    """Malformed partition, cycle type or range text."""

    exit_code = 2


class DomainError(StableCharError, ValueError):
    """A precondition of a formula is violated (n < lambda_1, inner not contained, ...)."""

    exit_code = 3


class GuardError(DomainError):
    """An input exceeds a hard size guard of an oracle or sweep."""

    exit_code = 3


class ConsistencyError(StableCharError, ArithmeticError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 1

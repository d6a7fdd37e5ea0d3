"""Exception hierarchy shared by every module.

Each error carries a stable machine-readable ``code`` used by the CLI
(exit-code mapping) and the HTTP service (error payloads).
"""

from __future__ import annotations


class StabshareError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class DimensionMismatch(StabshareError):
    code = "dimension_mismatch"


class NotASubspace(StabshareError):
    code = "not_a_subspace"


class NotSelfOrthogonal(StabshareError):
    code = "not_self_orthogonal"


class BadLagrangian(StabshareError):
    code = "bad_lagrangian"


class BadReps(StabshareError):
    code = "bad_reps"


class EqualSpaces(StabshareError):
    code = "equal_spaces"


class OutOfRange(StabshareError):
    code = "out_of_range"


class TooLarge(StabshareError):
    """Raised when an exhaustive computation would exceed its configured cap."""

    code = "too_large"


class DomainError(StabshareError):
    code = "domain_error"


class NotNested(StabshareError):
    code = "not_nested"


class BadPair(StabshareError):
    code = "bad_pair"


class BadParams(StabshareError):
    code = "bad_params"


class DuplicatePoints(StabshareError):
    code = "duplicate_points"


class NotPrimeField(StabshareError):
    code = "not_prime_field"


class EmptyEigenspace(StabshareError):
    code = "empty_eigenspace"


class NotSupported(StabshareError):
    code = "not_supported"


class ParseError(StabshareError):
    """Malformed code-file text; ``line`` is 1-based."""

    code = "parse_error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(StabshareError):
    """Well-formed input that violates a scheme invariant."""

    code = "validation_error"

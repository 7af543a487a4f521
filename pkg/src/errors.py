"""Exception hierarchy shared by the library and the command line.

Each exception carries the process exit code the CLI reports for it.
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graph.models import ValidationReport


class SurfaceError(Exception):
    """Base exception for surface-related errors."""

    exit_code: int = 3


class DomainError(SurfaceError):
    """Input is well-formed but mathematically outside an operation's domain."""

    exit_code = 1


class PreconditionError(DomainError):
    """A documented precondition of an operation does not hold."""


class GraphValidationError(DomainError):
    """A rotation graph failed validation."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        rules = sorted({violation.rule for violation in report.violations})
        super().__init__(f"Invalid rotation graph: {', '.join(rules)}")


class InputError(SurfaceError):
    """Unreadable file, malformed JSON or schema mismatch."""

    exit_code = 2


class InternalConsistencyError(SurfaceError):
    """A run-time invariant check failed; signals a bug, not bad input."""

    exit_code = 3

"""Exception types shared across the package."""

from __future__ import annotations


class HamiltonianParseError(ValueError):
    """Raised when Hamiltonian text input is malformed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalInvariantError(RuntimeError):
    """A self-check failed; the result would be unsound. Indicates a bug."""

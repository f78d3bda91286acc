"""Shared exception types.

The command line maps these onto exit codes: InputError -> 1,
DimensionMismatch -> 2, DomainError -> 3.
"""


class WittmatError(Exception):
    """Base class for all library errors."""


class InputError(WittmatError):
    """Malformed textual or JSON input."""


class DimensionMismatch(WittmatError):
    """Operands have incompatible matrix sizes or algebra ranks."""


class DomainError(WittmatError):
    """Arguments outside an operation's domain (bad signature, letter out of range, singular matrix, ...)."""

"""Exception types raised by qschur operations."""

from __future__ import annotations


class ScalarMismatchError(TypeError):
    """Arithmetic mixed a generic scalar with a specialized one, or two different orders."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


class IndexRangeError(ValueError):
    """A generator index, tensor slot or weight does not fit the session."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class CodecError(ValueError):
    """A JSON payload could not be decoded."""

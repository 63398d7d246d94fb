"""Domain exception hierarchy for the universal Coxeter toolkit.

These represent misuse of the algebra (bad indices, mismatched ranks, violated
preconditions) and are mapped to exit codes in the interface layer.
Verification failures are *not* exceptions: suites return reports.

Assumptions:
- Exceptions are lightweight and carry context in their message.
- Use specific exceptions over generic ones.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all domain-specific errors."""

    def __init__(self, message: str, *, cause: BaseException | None = None) -> None:
        """Create a domain error with a descriptive message and optional cause."""
        super().__init__(message)
        self.__cause__ = cause


class ValidationError(DomainError):
    """Raised when input data is malformed (index out of range, rank mismatch, ...)."""


class PreconditionError(DomainError):
    """Raised when a well-formed value does not meet an operation's precondition."""


class InvariantViolationError(DomainError):
    """Raised when a value breaks an invariant that construction should guarantee."""


class NotInducibleError(DomainError):
    """Raised when an automorphism does not descend to the quotient ``W_2``."""


class HandlerRejected(DomainError):
    """Raised by a certificate handler whose validity conditions do not hold."""


class ParseError(ValidationError):
    """Raised by the text codecs; ``offset`` is the byte offset of the bad token."""

    def __init__(self, message: str, *, offset: int, cause: BaseException | None = None) -> None:
        """Create a parse error pointing at ``offset`` in the input text."""
        super().__init__(f"{message} (at offset {offset})", cause=cause)
        self.reason = message
        self.offset = offset

    @classmethod
    def at(cls, message: str, text: str, index: int) -> ParseError:
        """Build an error for character ``index`` of ``text``, reported as a byte offset."""
        return cls(message, offset=len(text[:index].encode("utf-8")))

    def shifted(self, text: str, index: int) -> ParseError:
        """Re-anchor an error raised on a substring starting at character ``index`` of ``text``."""
        offset = len(text[:index].encode("utf-8")) + self.offset
        return ParseError(self.reason, offset=offset, cause=self)

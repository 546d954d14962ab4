"""
Exception types raised by adfnlp.

Every error derives from ``ValueError`` so callers that already guard input
validation with ``except ValueError`` keep working.
"""

from typing import Optional


class AdfnlpError(ValueError):
    """Base class for all adfnlp errors."""


class CapacityError(AdfnlpError):
    """An enumeration or saturation bound was exceeded."""

    def __init__(self, message: str, required: int, bound: int) -> None:
        super().__init__(f"{message} (required {required}, bound {bound})")
        self.required = required
        self.bound = bound


class ParseError(AdfnlpError):
    """Syntax or well-formedness error in an input file."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column
        self.reason = message


class UnknownAtomError(AdfnlpError):
    """An atom was looked up outside the universe it should belong to."""

    def __init__(self, atom: str, context: Optional[str] = None) -> None:
        where = f" in {context}" if context else ""
        super().__init__(f"Unknown atom '{atom}'{where}")
        self.atom = atom


class UniverseMismatchError(AdfnlpError):
    """Two interpretations were combined over different universes."""


class LinkError(AdfnlpError):
    """A link was requested that is not part of the derived link set."""


class NotDownwardClosedError(AdfnlpError):
    """A C^t family required to be downward-closed is not."""


class ReductError(AdfnlpError):
    """Preconditions of the stable-semantics reduct do not hold."""


class NotAdfPlusError(AdfnlpError):
    """A framework required to be attacking-only has a non-attacking link."""

    def __init__(self, violation: object) -> None:
        super().__init__(f"Not an ADF+: {violation}")
        self.violation = violation


class UnknownCheckError(AdfnlpError):
    """A verification check name is not registered."""

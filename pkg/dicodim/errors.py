"""Exception types raised by dicodim."""

from typing import Any


class DicodimError(Exception):
    """Base class for all dicodim errors."""


class ResourceLimitError(DicodimError):
    """A configured size cap was exceeded."""

    def __init__(self, message: str, limit: str, degree: int | None = None):
        super().__init__(message)
        self.limit = limit
        self.degree = degree


class ParseError(DicodimError, ValueError):
    """Malformed variety or algebra text."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column


class SignatureMismatchError(DicodimError, ValueError):
    """Objects over different signatures were combined."""


class DegreeMismatchError(DicodimError, ValueError):
    """A permutation or polynomial has the wrong degree."""


class NonHomogeneousError(DicodimError, ValueError):
    """A polynomial is not homogeneous in some variable."""


class CertificationError(DicodimError):
    """An algebra failed the identity check it was required to pass."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness

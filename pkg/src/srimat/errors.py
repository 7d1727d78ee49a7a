"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SrimatError(Exception):
    """Base class for every error raised on purpose by this package."""


class BoundExceededError(SrimatError, ValueError):
    """An enumeration was requested beyond the configured size bound."""

    def __init__(self, n: int, bound: int):
        super().__init__(f"n={n} exceeds the enumeration bound {bound}")
        self.n = n
        self.bound = bound


class MatrixFormatError(SrimatError, ValueError):
    """Base class for problems found while parsing a matrix."""


class EmptyMatrixError(MatrixFormatError):
    pass


class RaggedRowsError(MatrixFormatError):
    pass


class NegativeEntryError(MatrixFormatError):
    pass


class AsymmetricMatrixError(MatrixFormatError):
    pass


class NotInFamilyError(SrimatError, ValueError):
    """The matrix is not a member of any T(n, k)."""


class PhiDefectError(SrimatError, AssertionError):
    """An internal invariant of the pairing map failed.

    Never expected on valid input; signals a bug rather than bad data.
    """


class OddCorollaryError(SrimatError, ValueError):
    """The zero-diagonal alternating sum identity only holds for even n."""

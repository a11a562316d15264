"""Exception types raised across the package.

Two rough groups: parameter errors (a value handed to a constructor or
generator is outside its documented range) and precondition errors (the
matrix at hand does not admit the requested computation).  The command-line
front end maps the first group to exit code 2 and the second to exit code 3.
"""


class TritabError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(TritabError, ValueError):
    """A scalar or shape parameter is outside its allowed range."""


class OrderTooLargeError(InvalidParameterError):
    """Requested matrix order exceeds the supported cap."""


class NonPositiveParameterError(InvalidParameterError):
    """A parameter that must be strictly positive is zero or negative."""


class NonPositiveProductError(InvalidParameterError):
    """The product of the two off-diagonal parameters must be positive."""


class DimensionMismatchError(InvalidParameterError):
    """Band or vector lengths are inconsistent with the matrix order."""


class PreconditionError(TritabError, ValueError):
    """The input is structurally valid but violates an operation's precondition."""


class ZeroSubdiagonalError(PreconditionError):
    """A subdiagonal entry is exactly zero where the factorization divides by it.

    ``index`` is the 1-based position i of the offending entry (i.e. the
    matrix entry in row i+1, column i).
    """

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"subdiagonal entry {index} (row {index + 1}, col {index}) is zero")


class IndefiniteProductError(PreconditionError):
    """Some product sub[i]*sup[i] is not strictly positive, so the matrix has
    no real symmetrization and the bisection eigensolver does not apply."""


class NotAnEigenvalueError(PreconditionError):
    """The supplied shift is not an eigenvalue: the eigenvector recurrence
    produced a residual above tolerance."""

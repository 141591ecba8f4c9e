"""Exception hierarchy shared by all modules."""


class SemiHilbertError(Exception):
    """Base class for all errors raised by this package."""


class NotSquare(SemiHilbertError):
    """Raised when an operation requires a square matrix."""


class NotHermitian(SemiHilbertError):
    """Raised when a matrix fails the Hermitian symmetry check."""


class NotPSD(SemiHilbertError):
    """Raised when a matrix has an eigenvalue below the clamping window."""


class NoConvergence(SemiHilbertError):
    """Raised when the eigensolver does not converge."""


class DimensionMismatch(SemiHilbertError):
    """Raised when operand dimensions are incompatible."""


class NotInBA(SemiHilbertError):
    """Raised when an operator does not admit an A-adjoint."""


class NotInBAHalf(SemiHilbertError):
    """Raised when an operator is unbounded in the A-seminorm."""


class NotAPositive(SemiHilbertError):
    """Raised when an operator is not A-positive."""


class NotSupportedOnRange(SemiHilbertError):
    """Raised when an operator leaks outside the range of A."""


class DegenerateSpace(SemiHilbertError):
    """Raised when the weight matrix has rank zero."""


class NotUnitA(SemiHilbertError):
    """Raised when a vector required to be A-unit is not."""


class InvalidParams(SemiHilbertError):
    """Raised for parameter values outside their declared ranges."""


class InvalidConfig(SemiHilbertError):
    """Raised for malformed run or application configurations."""

"""Exception hierarchy shared by all pencilslice modules."""


class PencilSliceError(Exception):
    """Base class for errors raised by this package."""


class MatrixFormatError(PencilSliceError):
    """Input matrix failed parsing or structural validation."""


class PreconditionError(PencilSliceError):
    """A mathematical precondition of the requested operation does not hold."""


class SingularPencilError(PreconditionError):
    """The pencil is singular (normal rank below its dimension).

    Eigenvalue classification is refused for singular pencils; rank-aware
    bounds remain available.
    """


class TrivialBoundError(PreconditionError):
    """The targeted lower bound is trivial, so no witness exists for it."""


class ConvergenceError(PencilSliceError):
    """An iterative eigenvalue or factorization routine failed to converge."""

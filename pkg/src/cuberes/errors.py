"""Exception types raised across the package.

Every error carries its class name into CLI reports, so the names are part
of the public surface.
"""


class CuberesError(Exception):
    """Base class for all errors raised by cuberes."""


class InputError(CuberesError, ValueError):
    """Malformed input: bad syntax, bad arity, bad index."""


class ComputationError(CuberesError, ArithmeticError):
    """A well-formed input on which a computation path cannot proceed."""


class PolynomialSyntaxError(InputError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(expected))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class VariableOutOfRange(InputError):
    pass


class ArityMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class NotSquare(InputError):
    pass


class LengthMismatch(InputError):
    pass


class FaceMismatch(InputError):
    def __init__(self, message, vertex=None):
        self.vertex = vertex
        super().__init__(message)


class BadPermutation(InputError):
    pass


class ChiMismatch(ComputationError):
    pass


class NotHomogeneous(InputError):
    pass


class WrongArity(InputError):
    pass


class InvalidSystem(InputError):
    pass


class NotZeroDimensional(ComputationError):
    pass


class UnassignedMonomial(ComputationError):
    pass


class DegenerateMinor(ComputationError):
    pass


class PoissonPreconditionFailed(ComputationError):
    pass


class CrosscheckMismatch(ComputationError):
    def __init__(self, macaulay, poisson):
        self.macaulay = macaulay
        self.poisson = poisson
        super().__init__(f"macaulay gave {macaulay}, poisson gave {poisson}")


class BothPathsDegenerate(ComputationError):
    pass

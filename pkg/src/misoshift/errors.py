"""Exception hierarchy shared by all misoshift modules."""


class MisoshiftError(Exception):
    """Base class for every error raised by this package."""


class InputError(MisoshiftError, ValueError):
    """Malformed or inconsistent arguments."""


class NonHermitianInput(InputError):
    pass


class DimMismatch(InputError):
    pass


class WrongKind(InputError):
    pass


class ZeroVector(InputError):
    pass


class IndexOutOfHorizon(InputError, IndexError):
    pass


class HorizonTooShort(InputError):
    pass


class PreconditionFailed(MisoshiftError):
    """A construction precondition does not hold.

    ``item`` names the failing condition (``"p0"``, ``"positivity"``,
    ``"divergence"``, ``"degree"``, ``"invertibility"``, ...).
    """

    def __init__(self, item, message=""):
        self.item = item
        super().__init__(f"{item}: {message}" if message else item)


class SingularInput(PreconditionFailed):
    def __init__(self, message=""):
        super().__init__("invertibility", message)


class NumericalError(MisoshiftError, ArithmeticError):
    """Floating point breakdown inside an otherwise valid computation."""


class NoConvergence(NumericalError):
    pass


class NegativeEigenvalue(NumericalError):
    pass


class Singular(NumericalError):
    pass


class SqrtFailure(NumericalError):
    pass


class InversionFailure(NumericalError):
    pass

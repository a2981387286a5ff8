class KGCoulombError(Exception):
    """Base class for all errors raised by the package."""


class InvalidInputError(KGCoulombError, ValueError):
    pass


class DegenerateCaseError(InvalidInputError):
    """Raised when ``f == 0`` reaches a path that needs a Coulomb term."""


class SeriesTruncationError(KGCoulombError, ArithmeticError):
    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class ModeNotFoundError(KGCoulombError, LookupError):
    pass


class TailTooLargeError(KGCoulombError, ValueError):
    pass

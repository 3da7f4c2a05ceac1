"""Exception hierarchy. Every domain error is a ``HilbWallsError``; the CLI
prints the class name and exits with status 1."""


class HilbWallsError(ValueError):
    pass


class PreconditionViolation(HilbWallsError):
    pass


class MismatchedAmbient(HilbWallsError):
    pass


class ZeroClass(HilbWallsError):
    pass


class NegativeInput(HilbWallsError):
    pass


class NonNegativeInput(HilbWallsError):
    pass


class OutOfCone(HilbWallsError):
    pass


class OutOfRange(HilbWallsError):
    pass


class UnsupportedN(HilbWallsError):
    pass


class ProportionalInput(HilbWallsError):
    pass


class ZeroDegree(HilbWallsError):
    pass


class NotInCategory(HilbWallsError):
    pass


class InternalInconsistency(HilbWallsError):
    """An identity that must hold by construction failed; indicates a bug."""

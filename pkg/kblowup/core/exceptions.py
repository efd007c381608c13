"""
KBlowup Core - Custom Exceptions
"""


class KBlowupException(Exception):
    """Base exception for all KBlowup errors"""
    pass


class ParseError(KBlowupException):
    """Raised when polynomial or variable-list text is malformed"""
    pass


class ValidationError(KBlowupException):
    """Raised when well-formed input is not admissible for an operation"""
    pass


class RingMismatchError(KBlowupException):
    """Raised when operands live in different polynomial rings"""
    pass


class VariableCollisionError(KBlowupException):
    """Raised when an auxiliary variable name is already used by the ring"""
    pass


class HypothesisError(KBlowupException):
    """Raised when a geometric hypothesis of a computation fails"""
    pass


class NotSmoothError(HypothesisError):
    """Raised when a scheme required to be smooth has a nonempty singular locus"""
    pass


class ConstantTermError(HypothesisError):
    """Raised when I_min is requested for an ideal with a nonzero constant term"""
    pass


class OriginNotOnSchemeError(HypothesisError):
    """Raised when the origin does not lie on the scheme"""
    pass


class NotIsolatedError(HypothesisError):
    """Raised when singularities are required to be isolated and are not"""
    pass


class UnitIdealError(KBlowupException):
    """Raised when the unit ideal is passed where a proper ideal is needed"""
    pass


class StabilizationError(KBlowupException):
    """Raised when a windowed dimension does not stabilize within its bound"""
    pass


class ConvergenceError(StabilizationError):
    """Raised when a bicomplex truncation does not converge"""
    pass


class IterationLimitError(KBlowupException):
    """Raised when iterated saturation exceeds its cap"""
    pass


class InconsistentSequenceError(KBlowupException):
    """Raised when known dimensions violate exactness"""

    def __init__(self, message: str, window: tuple[int, ...] = ()):
        super().__init__(message)
        self.window = window


class SpliceConflictError(KBlowupException):
    """Raised when spliced sequences disagree on a shared term"""
    pass


class WindowError(KBlowupException):
    """Raised when an element falls outside a finite truncation basis"""
    pass

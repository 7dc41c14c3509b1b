"""Exception hierarchy. Each class carries the process exit code the CLI maps it to."""


class HyperpackError(Exception):
    exit_code = 1


class InvalidParameters(HyperpackError, ValueError):
    exit_code = 2


class NotHyperbolic(InvalidParameters):
    pass


class NotDoublyTruncated(InvalidParameters):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class AmbiguousClassification(InvalidParameters):
    pass


class DomainError(HyperpackError, ValueError):
    exit_code = 2


class SymmetryUnavailable(InvalidParameters):
    pass


class FeasibilityError(HyperpackError, ValueError):
    exit_code = 3

    def __init__(self, message, constraint=None):
        super().__init__(message)
        self.constraint = constraint


class EmptyScan(HyperpackError):
    exit_code = 4


class InternalInconsistency(HyperpackError, ArithmeticError):
    exit_code = 5


class QuadratureError(InternalInconsistency):
    pass

"""Exception hierarchy shared by the engine and the CLI.

Each class carries the CLI exit code it maps to.
"""


class HocolimError(Exception):
    exit_code = 3


class ParseError(HocolimError):
    exit_code = 1


class DSLSyntaxError(ParseError):
    def __init__(self, message, line=None, column=None, token=None):
        self.line, self.column, self.token = line, column, token
        where = f"line {line}, column {column}: " if line is not None else ""
        found = f" (found {token!r})" if token is not None else ""
        super().__init__(f"{where}{message}{found}")


class ValidationError(HocolimError):
    exit_code = 2


class ResolutionError(ValidationError):
    pass


class ShapeError(ValidationError):
    pass


class FunctorialityError(ValidationError):
    pass


class InvalidDiagram(FunctorialityError):
    pass


class RingMismatch(ValidationError):
    pass


class SimplicialIdentityError(ValidationError):
    pass


class ComputationError(HocolimError):
    exit_code = 3


class NonFreeHomology(ComputationError):
    pass


class TruncationExceeded(ComputationError):
    pass


class InsufficientTruncation(ComputationError):
    pass


class InfiniteAntidiagonal(ComputationError):
    pass


class LoopsInIndexCategory(ComputationError):
    pass


class NoSolution(ComputationError):
    pass

"""Exception types raised across the package."""


class CnfError(Exception):
    """Base class for every error raised by mucnf."""


class EmptyClause(CnfError, ValueError):
    pass


class IncompleteAssignment(CnfError, ValueError):
    pass


class DimacsSyntaxError(CnfError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderMismatch(CnfError, ValueError):
    pass


class TooManyVariables(CnfError, ValueError):
    pass


class NotTwoSat(CnfError, ValueError):
    pass


class SolverTimeout(CnfError):
    pass


class InvalidParameter(CnfError, ValueError):
    pass


class NotSurjective(CnfError, ValueError):
    pass


class WidthExceedsDonor(CnfError, ValueError):
    pass


class BadIndex(CnfError, IndexError):
    pass


class InputSatisfiable(CnfError):
    pass


class UnusedVariable(CnfError, ValueError):
    pass

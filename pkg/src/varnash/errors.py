"""Exception hierarchy shared by every module."""


class GameError(Exception):
    """Base class for all package errors."""


class DimensionError(GameError, ValueError):
    pass


class DomainError(GameError):
    """Operation not supported for this kind of strategy set."""


class FeasibilityError(GameError, ValueError):
    pass


class ConfigError(GameError, ValueError):
    pass


class SizeError(GameError, ValueError):
    """Game too large for exhaustive computation."""


class GridError(GameError, ValueError):
    pass


class ParseError(GameError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NonConvergence(GameError):
    """Raised when an iterative solver exhausts its budget.

    ``result`` holds the best iterate seen, with its certificate, so callers
    can still report how close the run got.
    """

    def __init__(self, message, result):
        super().__init__(message)
        self.result = result

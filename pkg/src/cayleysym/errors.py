"""Exception types raised across the package."""


class CayleySymError(Exception):
    pass


class ContractViolation(CayleySymError, IndexError):
    """An argument is outside the domain an operation accepts."""


class SelfCheckFailed(CayleySymError, AssertionError):
    """A construction failed its own consistency check (an internal bug)."""


class NonGeneratingSet(CayleySymError, ValueError):
    pass


class InvalidConnectionSet(CayleySymError, ValueError):
    pass


class NotSymmetric(CayleySymError, ValueError):
    pass


class InvalidEdge(CayleySymError, ValueError):
    pass


class Unsupported(CayleySymError, ValueError):
    pass


class ParseError(CayleySymError, ValueError):
    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class TooLarge(CayleySymError, ValueError):
    pass


class NotAnEdge(CayleySymError, ValueError):
    pass


class NotAnArc(CayleySymError, ValueError):
    pass


class PreconditionFailed(CayleySymError, ValueError):
    pass

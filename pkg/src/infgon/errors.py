"""Exception hierarchy shared by all infgon modules."""


class InfgonError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(InfgonError, ValueError):
    pass


class NotADiagonalError(InvalidInputError):
    """Raised when two vertices are equal or neighbouring."""


class OutOfRangeError(InvalidInputError, IndexError):
    pass


class NoMorphismError(InfgonError):
    """The Hom space between the two objects vanishes."""


class PreconditionError(InfgonError):
    pass


class NonTerminationError(InfgonError):
    def __init__(self, message, trace=()):
        super().__init__(message)
        self.trace = list(trace)


class NotAMemberError(InfgonError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "not a member"


class FlipError(InfgonError):
    pass


class ModelFormatError(InvalidInputError):
    """Malformed model file; ``location`` points at the offending field or line."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)

"""Exception hierarchy shared by all modules."""


class FgcError(Exception):
    """Base class for every error raised by this package."""


class OutOfRange(FgcError, ValueError):
    pass


class SizeMismatch(FgcError, ValueError):
    pass


class NotACycleVertex(FgcError, ValueError):
    pass


class DivisibilityViolation(FgcError, ValueError):
    pass


class NotAHomomorphism(FgcError, ValueError):
    pass


class InvalidTriple(FgcError, ValueError):
    pass


class NotBijective(FgcError, ValueError):
    pass


class NotCommuting(FgcError, ValueError):
    pass


class PreconditionError(FgcError, ValueError):
    pass


class BadParams(FgcError, ValueError):
    pass


class InfeasibleM(FgcError, ValueError):
    pass


class BoundExceeded(FgcError):
    """A brute-force or exhaustive search would exceed its configured size bound."""


class ParseError(FgcError, ValueError):
    def __init__(self, message: str, line: int = 1, position: int = 0):
        super().__init__(f"line {line}, position {position}: {message}")
        self.line = line
        self.position = position

"""Exception hierarchy shared by the group computation services."""


class BraidforgeError(Exception):
    """Base exception for braidforge errors."""

    pass


class InvariantViolation(BraidforgeError):
    """An internal consistency check failed (a bug, not bad input)."""

    pass


class WordSyntaxError(BraidforgeError):
    """Word text could not be parsed."""

    def __init__(self, message: str, text: str = "", column: int | None = None):
        super().__init__(message)
        self.text = text
        self.column = column


class SubstitutionError(BraidforgeError):
    """Substitution would not terminate."""

    pass

"""Exception types shared across the workbench."""


class NmError(Exception):
    """Base class for all workbench errors."""


class FormulaSyntaxError(NmError):
    """Raised on malformed formula, theory, default, or program text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class CapExceededError(NmError):
    """An enumeration cap (atoms, defaults, literals) was exceeded."""


class PreconditionError(NmError):
    """A semantic precondition of an operation does not hold."""


class SideConditionError(NmError):
    """A theorem side condition required by an operation is violated."""


class TranslationError(NmError):
    """A program cannot be translated in the requested way."""


class BudgetExhaustedError(NmError):
    """Rejection sampling ran out of attempts for an instance family."""

"""Exception types shared across the package."""


class PolydenseError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(PolydenseError):
    """Operands live in different ambient dimensions."""


class DegenerateInput(PolydenseError):
    """Input is structurally degenerate for the requested operation (e.g. v == w)."""


class BudgetExceeded(PolydenseError):
    """An exact enumeration or search would exceed its configured budget.

    ``required`` carries the size the request would have needed.
    """

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required

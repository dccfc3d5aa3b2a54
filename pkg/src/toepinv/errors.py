"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class OrderMismatchError(ValueError):
    """Two truncated series of different orders were combined."""


class UnsupportedClassError(ValueError):
    """The requested function class has no coefficient parametrization."""


class InvalidProblemError(ValueError):
    """A search problem violates its own invariants."""


class BudgetError(RuntimeError):
    """An evaluation budget guard would be exceeded."""

"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class IterationError(RuntimeError):
    """An iterative solver exhausted its budget without converging."""

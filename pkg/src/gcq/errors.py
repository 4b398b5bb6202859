"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class NumericalError(ArithmeticError):
    """An iterative numerical routine failed to converge."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class CapacityError(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, count, cap):
        super().__init__(f"enumeration of {count} items exceeds cap {cap}")
        self.count = count
        self.cap = cap

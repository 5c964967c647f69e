"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured work cap."""

    def __init__(self, what, needed, budget):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: {needed} exceeds budget {budget}")


class GraphError(ValueError):
    """Malformed graph input or a graph that violates a precondition."""


class ParseError(ValueError):
    """A matrix or edge-list file could not be read."""

"""Exception types shared across the package."""


class BudgetExhausted(RuntimeError):
    """An objective evaluation was requested but the budget has none left."""


class DimensionMismatch(ValueError):
    """A vector's length does not match the search-space dimension."""


class NonFiniteObjective(ValueError):
    """An objective value was NaN or infinite where a finite value is required."""


class SameSourceIndex(ValueError):
    """A food source was asked to recombine with itself."""


class EmptyInput(ValueError):
    """An operation received an empty collection."""


class OddPopulation(ValueError):
    """The hybrid needs an even population so the best half is a whole number."""


class UnknownFunctionId(ValueError):
    """No benchmark function is registered under the requested id."""


class IncompleteCell(ValueError):
    """A summary cell has fewer run records than the experiment requires."""

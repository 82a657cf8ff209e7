"""Exception hierarchy shared by every module.

The CLI maps each class to an exit code, so new failure modes should
subclass one of these rather than raise bare ``ValueError``.
"""


class LinkDensityError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class DomainError(LinkDensityError, ValueError):
    """A precondition on the input was violated."""

    exit_code = 2


class InvalidWordError(DomainError):
    """A braid word refers to a generator outside 1..m-1."""


class BudgetExceeded(LinkDensityError):
    """A search ran out of its parameter budget before meeting a bound.

    ``best`` carries the closest value reached, when one exists.
    """

    exit_code = 3

    def __init__(self, message, best=None, best_parameter=None):
        super().__init__(message)
        self.best = best
        self.best_parameter = best_parameter


class ResourceError(BudgetExceeded):
    """A computation refused to run past its size cap."""


class ConsistencyError(LinkDensityError, AssertionError):
    """Two independent engines disagreed. Always a bug."""

    exit_code = 4

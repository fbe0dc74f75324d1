"""Exception types shared across the library."""


class FourierJacobiError(Exception):
    """Base class for library errors."""


class DomainError(FourierJacobiError):
    """An argument lies outside the mathematical domain of an operation."""


class PrecisionError(FourierJacobiError):
    """Requested accuracy could not be reached within the evaluation budget.

    Carries the achieved error estimate in ``achieved`` when available.
    """

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved

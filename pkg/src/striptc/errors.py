"""Exception types shared across the package."""


class InvalidParamsError(ValueError):
    """Parameters outside the supported domain (n < 1, w < 1, r < 2, ...)."""


class ResourceLimitError(RuntimeError):
    """A configured cell-count or memory budget would be exceeded.

    Carries enough context to report which dimension blew the budget.
    """

    def __init__(self, message, *, dimension=None, count=None):
        super().__init__(message)
        self.dimension = dimension
        self.count = count


class NotACycleError(ValueError):
    """A chain passed where a cycle was required; ``index`` points at the offender."""

    def __init__(self, message, *, index=None):
        super().__init__(message)
        self.index = index


class WheelTooSmallError(ValueError):
    """A single-disk wheel has no degree-1 image."""


class DimensionMismatchError(ValueError):
    """Vectors or chains do not live in a common ambient space."""


class TorusConstructionError(RuntimeError):
    """A generated wheel pair fails the disk-partition sanity check.

    Raised instead of silently repairing the construction: a failure here
    means the closed-form label pattern is wrong for these parameters.
    """


class UnknownSpaceError(LookupError):
    """No tabulated reference value for the requested space."""

"""Exception types shared across the package."""


class CatorientError(Exception):
    """Base class for all package errors."""


class InvalidSpecError(CatorientError, ValueError):
    """An instance description violates the caterpillar shape rules.

    Carries the name of the offending field so command-line diagnostics can
    point at it.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(message)


class FormatError(CatorientError, ValueError):
    """A serialized instance or result document is malformed."""


class UnsupportedShapeError(CatorientError):
    """The constructive pipeline does not cover this shape (no legs, or leg length 1)."""


class IncompleteLabelingError(CatorientError):
    """A vertex sum was requested next to an unlabeled edge."""


class SpineSearchError(CatorientError):
    """Base class for spine labeling search failures."""


class SearchExhaustedError(SpineSearchError):
    """The spine search space was exhausted without a valid plan.

    A valid plan always exists, so this signals an implementation bug rather
    than a true negative.
    """


class BudgetExceededError(SpineSearchError):
    """The spine search hit its node budget before finding a plan."""


class InstanceTooLargeError(CatorientError):
    """The brute-force oracle refuses instances above its edge cap."""


class ConstructionError(CatorientError):
    """An internal consistency check failed while assembling a labeling."""

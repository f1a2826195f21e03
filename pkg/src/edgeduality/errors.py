"""Exception and warning types raised by the numerical routines."""


class EdgeDualityError(Exception):
    """Base class for library errors."""


class ConvergenceError(EdgeDualityError):
    """A quadrature or refinement loop failed to stabilize."""


class BranchCutError(EdgeDualityError, ValueError):
    """Evaluation point lies on a branch cut and no side was given."""


class SingularityError(EdgeDualityError, ValueError):
    """Evaluation at a genuine singularity (e.g. a Hankel function at 0)."""


class NearSupportError(EdgeDualityError, ValueError):
    """Cauchy transform requested too close to the support of the weight."""


class MultiCutError(EdgeDualityError):
    """The one-cut ansatz produced a density that is not positive."""


class InstabilityError(EdgeDualityError):
    """A recurrence lost positivity or accuracy."""


class IllConditionedError(EdgeDualityError):
    """Vandermonde-type normalizations are numerically meaningless."""


class SectorMismatchError(EdgeDualityError, ValueError):
    """Sector labels disagree with the location of the points."""


class BudgetExceededError(EdgeDualityError):
    """A brute-force quadrature would exceed its node budget."""


class RecurrenceInstabilityWarning(RuntimeWarning):
    """Downward recurrence cancelled too many digits; fell back to quadrature."""

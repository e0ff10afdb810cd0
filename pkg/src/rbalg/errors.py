"""Exception hierarchy.

Everything derives from :class:`AlgebraError` so callers (the CLI in
particular) can separate mathematical failures, which carry a report, from
malformed input.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by the package."""


class FieldError(AlgebraError, ValueError):
    """Bad field specification or mixing of incompatible fields."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class KindError(AlgebraError, ValueError):
    """Operation requires a different algebra kind (Lie/associative)."""


class UnsupportedField(AlgebraError):
    """Criterion is unsound or unimplemented over the given field."""


class CheckFailed(AlgebraError):
    """A mathematical identity failed; ``report`` holds the witnesses."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class LawViolation(CheckFailed):
    """Structure constants do not satisfy the law of the declared kind."""


class NotSubalgebra(CheckFailed):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class RBVerificationError(CheckFailed):
    pass


class NotRBDerived(CheckFailed):
    """A post-associative structure is not induced by x > 1 as RB operator."""


class BudgetExceeded(AlgebraError):
    pass


class WeightError(AlgebraError, ValueError):
    """Operation is defined for a different Rota-Baxter weight."""


class DecompositionError(AlgebraError, ValueError):
    """A decomposition lacks a property the operation requires (e.g. directness)."""

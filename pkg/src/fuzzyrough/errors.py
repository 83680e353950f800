"""Exception hierarchy.

Everything raised on purpose by the library derives from ``FuzzyRoughError``.
``ValidationError`` subclasses map to CLI exit code 4, ``BudgetExceeded`` to 5.
"""


class FuzzyRoughError(Exception):
    pass


class ValidationError(FuzzyRoughError):
    pass


class ParseError(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class ValueNotInChain(ValidationError):
    pass


class ChainNotClosed(ValidationError):
    pass


class UniverseMismatch(ValidationError):
    pass


class NotSimilarity(ValidationError):
    pass


class NotAQuasiorder(ValidationError):
    pass


class NotUpperFixed(ValidationError):
    pass


class NotLowerFixed(ValidationError):
    pass


class ConditionCRequired(ValidationError):
    pass


class ConditionDRequired(ValidationError):
    pass


class ConditionIDRequired(ValidationError):
    pass


class NegatorNotInvolutive(ValidationError):
    pass


class UncertifiedPair(ValidationError):
    pass


class SelectionImpossible(FuzzyRoughError):
    """Raised when a representative cannot be picked; means a violated precondition."""


class NonNumericColumn(ValidationError):
    pass


class EmptyTable(ValidationError):
    pass


class BudgetExceeded(FuzzyRoughError):
    def __init__(self, bound, budget):
        super().__init__(f"search space has {bound} candidates, budget is {budget}")
        self.bound = bound
        self.budget = budget

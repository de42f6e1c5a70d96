"""Exception hierarchy for the nsg package."""


class NsgError(Exception):
    """Base class for all errors raised by nsg."""


class EmptyInput(NsgError, ValueError):
    pass


class GcdNotOne(NsgError, ValueError):
    pass


class NotAMember(NsgError, ValueError):
    pass


class TooManyGaps(NsgError, ValueError):
    pass


class AlphaEven(NsgError, ValueError):
    pass


class AlphaNotInH1(NsgError, ValueError):
    pass


class AlphaIsGenerator(NsgError, ValueError):
    pass


class BaseMismatch(NsgError, ValueError):
    pass


class NotContained(NsgError, ValueError):
    pass


class NotIntegral(NsgError, ValueError):
    pass


class NotPrimary(NsgError, ValueError):
    pass


class InconsistentClassification(NsgError, AssertionError):
    """The independent 2-AGL criteria disagreed; this is always a bug."""


class NotTwoAGL(NsgError, ValueError):
    pass


class NotAdmissible(NsgError, ValueError):
    pass


class NotLocal(NsgError, ValueError):
    pass


class TruncationTooSmall(NsgError, ValueError):
    pass


class StabilizationFailed(NsgError, ArithmeticError):
    pass


class NoReductionFound(NsgError, ArithmeticError):
    """No reduction element was found among the sampled candidates.

    This is a non-verdict: it does not mean the ideal fails to be Ulrich.
    """


class HypothesisFailed(NsgError, ValueError):
    pass


class PreconditionFailed(NsgError, ValueError):
    pass


class NotGorenstein(NsgError, ValueError):
    pass


class ShapeMismatch(NsgError, ValueError):
    pass


class DegreeTooLarge(NsgError, ValueError):
    pass


class MalformedCase(NsgError, ValueError):
    pass


class BoundTooSmallWarning(UserWarning):
    pass

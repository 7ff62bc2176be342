"""Exception hierarchy shared by all modules.

Each exception carries the exit code the CLI maps it to.
"""


class MLDegreeError(Exception):
    exit_code = 1


class InputError(MLDegreeError, ValueError):
    """Malformed input: bad JSON, wrong shapes, invalid values."""

    exit_code = 2


class NonUnitConstantTerm(InputError):
    pass


class InsufficientOrder(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotSquarefree(InputError):
    pass


class DegenerateElimination(InputError):
    pass


class UnsupportedDimension(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class SubspaceMismatch(InputError):
    pass


class NotFullDimensional(InputError):
    pass


class FanNotRefining(InputError):
    pass


class TooLarge(InputError):
    pass


class HypothesisError(MLDegreeError):
    """The input is well formed but a mathematical hypothesis fails."""

    exit_code = 3


class SmoothnessHypothesisViolated(HypothesisError):
    def __init__(self, message, cone=None):
        super().__init__(message)
        self.cone = cone


class OriginOnEdgeLine(HypothesisError):
    pass


class CodimensionDeficit(HypothesisError):
    pass


class InfinitelyManyCriticalPoints(HypothesisError):
    pass


class DegenerateSystem(HypothesisError):
    pass


class PrecisionExhausted(MLDegreeError):
    exit_code = 5

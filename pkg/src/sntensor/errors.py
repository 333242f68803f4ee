class SnTensorError(Exception):
    """Base class for computation errors raised by this package."""


class WeightMismatchError(SnTensorError, ValueError):
    pass


class ValidityRangeError(SnTensorError, ValueError):
    """A closed form was asked for outside the range where it is known to hold."""


class ResourceLimitError(SnTensorError):
    pass


class ConsistencyError(SnTensorError, ArithmeticError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class ParityMismatchError(SnTensorError, ValueError):
    pass

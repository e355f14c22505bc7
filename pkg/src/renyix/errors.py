"""Exception hierarchy.

Every input-validation failure raised by the library derives from
:class:`EntropyInputError`, which is a :class:`ValueError`; the CLI maps
these to exit status 2.
"""


class EntropyInputError(ValueError):
    """Base class for invalid inputs to any renyix routine."""


class NegativeComponentError(EntropyInputError):
    pass


class NotNormalizedError(EntropyInputError):
    pass


class ZeroSumError(EntropyInputError):
    pass


class BadKError(EntropyInputError):
    pass


class NegativeOrderError(EntropyInputError):
    pass


class UnsortedGridError(EntropyInputError):
    pass


class BadInterpError(EntropyInputError):
    pass


class OutOfRangeError(EntropyInputError):
    pass


class NoRootInUnitIntervalError(EntropyInputError):
    pass


class MultipleRootsError(EntropyInputError):
    pass


class EqualOrdersError(EntropyInputError):
    pass


class OrderOutsideValidityError(EntropyInputError):
    pass


class DisorderedError(EntropyInputError):
    """Entropy inputs violate H0 >= H2 >= H3."""


class BadBinsError(EntropyInputError):
    pass


class LevelOutOfRangeError(EntropyInputError):
    pass


class DegenerateOrdersError(EntropyInputError):
    pass


class DominanceWarning(UserWarning):
    """An H3-based bound came out tighter than the H2-based one."""

"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 1).  The two
cross-check failures derive from :class:`ConsistencyError`; they mean two
independent computations disagreed, which is a bug rather than bad input.
"""


class DelzantSliceError(Exception):
    pass


class InputError(DelzantSliceError, ValueError):
    pass


class DimensionMismatch(InputError):
    pass


class DependentInput(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class Unbounded(InputError):
    pass


class Empty(InputError):
    pass


class NotSimple(InputError):
    pass


class RedundantHalfSpace(InputError):
    pass


class NotSmoothDelzant(InputError):
    pass


class UnknownName(InputError):
    pass


class BadParams(InputError):
    pass


class DegenerateImage(DelzantSliceError):
    pass


class ConsistencyError(DelzantSliceError):
    pass


class CrossCheckMismatch(ConsistencyError):
    pass


class EquivalenceViolated(ConsistencyError):
    pass

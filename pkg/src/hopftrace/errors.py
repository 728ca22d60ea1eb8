"""Exception hierarchy shared by the engine."""


class HopfTraceError(Exception):
    """Base class for engine errors."""


class OrderMismatch(HopfTraceError, ValueError):
    """Arithmetic between elements of different cyclotomic fields."""


class DimensionMismatch(HopfTraceError, ValueError):
    pass


class SingularMatrix(HopfTraceError, ZeroDivisionError):
    pass


class Unsupported(HopfTraceError, ValueError):
    """Parameters outside the range the construction is defined for."""


class NotSelfDual(HopfTraceError):
    pass


class NotSimple(HopfTraceError):
    pass


class SpanNotReached(HopfTraceError):
    """Words up to the length bound fail to span End(V)."""


class Degenerate(HopfTraceError):
    """A Skolem-Noether solution turned out singular."""


class NotScalar(HopfTraceError):
    pass

"""Exception hierarchy shared by all jmlat modules."""


class JmlatError(Exception):
    """Base class for every error raised by the package."""


class CycleDetected(JmlatError):
    pass


class NotALattice(JmlatError):
    """Raised when a pair of elements lacks a unique join or meet."""

    def __init__(self, pair, reason):
        self.pair = tuple(pair)
        self.reason = reason
        super().__init__(f"{reason}: {pair[0]!r}, {pair[1]!r}")


class NoBoundedElements(JmlatError):
    pass


class InvalidParams(JmlatError):
    pass


class MapNotTotal(JmlatError):
    pass


class VariableSetMismatch(JmlatError):
    pass


class ZeroPolynomial(JmlatError):
    pass


class ResourceLimit(JmlatError):
    """A pair or degree budget was exhausted during a Groebner computation."""


class ShapeNotRecognized(JmlatError):
    pass

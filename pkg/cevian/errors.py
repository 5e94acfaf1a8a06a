class CevianError(Exception):
    pass


class CoincidentPoints(CevianError, ValueError):
    pass


class CoincidentLines(CevianError, ValueError):
    pass


class DegenerateInput(CevianError, ValueError):
    """The input does not determine a unique object (e.g. five points on no unique conic)."""


class DegenerateConic(CevianError, ValueError):
    pass


class PointAtInfinity(CevianError, ValueError):
    pass


class HexagonPointAtInfinity(PointAtInfinity):
    pass


class NotOnSideline(CevianError, ValueError):
    pass


class TraceAtVertex(CevianError, ValueError):
    pass


class OnSideline(CevianError, ValueError):
    pass


class DegenerateConfiguration(CevianError, ValueError):
    pass


class DegeneratePair(CevianError, ValueError):
    pass


class TangentPole(CevianError, ValueError):
    pass


class RayMiss(CevianError, ValueError):
    pass


class ConcurrencyViolation(CevianError, RuntimeError):
    """A concurrency that holds by theorem failed to hold: an implementation bug, not bad data."""


class GeneratorExhausted(CevianError, RuntimeError):
    pass


class PerspectorNotFound(CevianError, RuntimeError):
    pass

"""Homogeneous points and lines of the projective plane, in exact arithmetic.

Every triple is stored canonically: coprime integers whose first nonzero entry
is positive. Two triples are projectively equal exactly when their canonical
forms are equal, so ``==`` and ``hash`` are projective.
"""
from typing import Iterator

from .errors import CoincidentLines, CoincidentPoints, DegenerateInput, PointAtInfinity
from .linalg import Rational, as_fraction, cross, det3, integer_row, primitive


class Homogeneous:
    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise DegenerateInput(f"{self.__class__.__name__} needs 3 coordinates, got {len(coords)}")
        ints, _ = integer_row(coords)
        if not any(ints):
            raise DegenerateInput(f"{self.__class__.__name__} with all-zero coordinates")
        object.__setattr__(self, "coords", primitive(ints))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        return type(other) is type(self) and other.coords == self.coords

    def __hash__(self):
        return hash((self.__class__.__name__, self.coords))

    def __repr__(self):
        return f"{self.__class__.__name__}({':'.join(str(c) for c in self.coords)})"

    def __reduce__(self):
        return (self.__class__, self.coords)

    def to_list(self):
        return list(self.coords)


class ProjPoint(Homogeneous):
    __slots__ = ()

    x = property(lambda self: self.coords[0])
    y = property(lambda self: self.coords[1])
    z = property(lambda self: self.coords[2])

    @classmethod
    def from_cartesian(cls, x: Rational, y: Rational) -> "ProjPoint":
        return cls(as_fraction(x), as_fraction(y), 1)

    @property
    def is_finite(self) -> bool:
        return self.z != 0

    def cartesian(self):
        if self.z == 0:
            raise PointAtInfinity(f"{self!r} has no Cartesian chart")
        return as_fraction(self.x) / self.z, as_fraction(self.y) / self.z


class ProjLine(Homogeneous):
    __slots__ = ()

    u = property(lambda self: self.coords[0])
    v = property(lambda self: self.coords[1])
    w = property(lambda self: self.coords[2])

    def residual(self, p: ProjPoint) -> int:
        return self.u * p.x + self.v * p.y + self.w * p.z

    def contains(self, p: ProjPoint) -> bool:
        return self.residual(p) == 0


LINE_AT_INFINITY = ProjLine(0, 0, 1)


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    coords = cross(p.coords, q.coords)
    if not any(coords):
        raise CoincidentPoints(f"cannot join {p!r} with itself")
    return ProjLine(coords)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    coords = cross(l.coords, m.coords)
    if not any(coords):
        raise CoincidentLines(f"cannot meet {l!r} with itself")
    return ProjPoint(coords)


def bracket(p, q, r) -> int:
    """det of three homogeneous triples; zero iff collinear (points) / concurrent (lines)."""
    return det3((p.coords, q.coords, r.coords))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return bracket(p, q, r) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return bracket(l, m, n) == 0


def proj_equal(p: Homogeneous, q: Homogeneous) -> bool:
    return not any(cross(tuple(p), tuple(q)))


def span(p: ProjPoint, q: ProjPoint, s: Rational, t: Rational) -> ProjPoint:
    """The point s*p + t*q on the line through p and q."""
    s, t = as_fraction(s), as_fraction(t)
    return ProjPoint(tuple(s * a + t * b for a, b in zip(p, q)))

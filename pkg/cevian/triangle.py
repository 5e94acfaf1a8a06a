"""Reference triangle, barycentric coordinates, and the isogonal/isotomic maps."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence, Tuple

from .errors import DegenerateInput, NotOnSideline, OnSideline, PointAtInfinity, TraceAtVertex
from .linalg import Rational, as_fraction, cross
from .projective import LINE_AT_INFINITY, Homogeneous, ProjLine, ProjPoint, join

SIDES = ("a", "b", "c")


class Bary(Homogeneous):
    """Homogeneous barycentric coordinates relative to some Triangle."""

    __slots__ = ()

    x = property(lambda self: self.coords[0])
    y = property(lambda self: self.coords[1])
    z = property(lambda self: self.coords[2])

    @property
    def is_finite(self) -> bool:
        return sum(self.coords) != 0

    def zeros(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c == 0)


@dataclass(frozen=True)
class Triangle:
    """Triangle with rational Cartesian vertices in the chart z = 1."""

    a_xy: Tuple[Fraction, Fraction]
    b_xy: Tuple[Fraction, Fraction]
    c_xy: Tuple[Fraction, Fraction]

    def __post_init__(self):
        for name in ("a_xy", "b_xy", "c_xy"):
            x, y = getattr(self, name)
            object.__setattr__(self, name, (as_fraction(x), as_fraction(y)))
        (ax, ay), (bx, by), (cx, cy) = self.a_xy, self.b_xy, self.c_xy
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            raise DegenerateInput("triangle vertices are collinear")

    @classmethod
    def from_points(cls, points: Sequence[Sequence[Rational]]) -> "Triangle":
        a, b, c = points
        return cls(tuple(a), tuple(b), tuple(c))

    @property
    def A(self) -> ProjPoint:
        return ProjPoint.from_cartesian(*self.a_xy)

    @property
    def B(self) -> ProjPoint:
        return ProjPoint.from_cartesian(*self.b_xy)

    @property
    def C(self) -> ProjPoint:
        return ProjPoint.from_cartesian(*self.c_xy)

    @property
    def vertices(self) -> Tuple[ProjPoint, ProjPoint, ProjPoint]:
        return self.A, self.B, self.C

    @property
    def side_a(self) -> ProjLine:
        return join(self.B, self.C)

    @property
    def side_b(self) -> ProjLine:
        return join(self.C, self.A)

    @property
    def side_c(self) -> ProjLine:
        return join(self.A, self.B)

    @property
    def sidelines(self) -> Tuple[ProjLine, ProjLine, ProjLine]:
        return self.side_a, self.side_b, self.side_c

    @staticmethod
    def _dist2(p, q) -> Fraction:
        return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2

    @property
    def a2(self) -> Fraction:
        return self._dist2(self.b_xy, self.c_xy)

    @property
    def b2(self) -> Fraction:
        return self._dist2(self.c_xy, self.a_xy)

    @property
    def c2(self) -> Fraction:
        return self._dist2(self.a_xy, self.b_xy)

    @property
    def squares(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.a2, self.b2, self.c2

    def _homogeneous_vertices(self):
        return [(x, y, Fraction(1)) for x, y in (self.a_xy, self.b_xy, self.c_xy)]

    def to_dict(self):
        return {"triangle": [[str(x), str(y)] for x, y in (self.a_xy, self.b_xy, self.c_xy)]}


def bary_to_proj(tri: Triangle, b: Bary) -> ProjPoint:
    x, y, z = b.coords
    (ax, ay), (bx, by), (cx, cy) = tri.a_xy, tri.b_xy, tri.c_xy
    return ProjPoint(x * ax + y * bx + z * cx, x * ay + y * by + z * cy, x + y + z)


def proj_to_bary(tri: Triangle, p: ProjPoint) -> Bary:
    a, b, c = tri._homogeneous_vertices()
    rows = (cross(b, c), cross(c, a), cross(a, b))
    return Bary(tuple(sum(r_i * p_i for r_i, p_i in zip(r, p.coords)) for r in rows))


def side_index(t: Bary) -> int:
    """Index of the sideline a trace lies on: 0 for BC, 1 for CA, 2 for AB."""
    zeros = t.zeros()
    if len(zeros) == 2:
        raise TraceAtVertex(f"{t!r} is a vertex")
    if len(zeros) != 1:
        raise NotOnSideline(f"{t!r} is not on a sideline")
    return zeros[0]


def _on_side_map(t: Bary, weights: Sequence[Fraction]) -> Bary:
    i = side_index(t)
    coords = [Fraction(0)] * 3
    for j in range(3):
        if j != i:
            coords[j] = weights[j] / t.coords[j]
    return Bary(coords)


def isogonal_trace(tri: Triangle, t: Bary) -> Bary:
    """Trace of the cevian isogonal to the cevian through t: (0:u:v) -> (0 : b2*v : c2*u)."""
    return _on_side_map(t, tri.squares)


def isotomic_trace(t: Bary) -> Bary:
    """Reflection of a trace in the midpoint of its side: (0:u:v) -> (0:v:u)."""
    return _on_side_map(t, (Fraction(1),) * 3)


def isogonal_conjugate(tri: Triangle, b: Bary) -> Bary:
    if b.zeros():
        raise OnSideline(f"{b!r} lies on a sideline")
    x, y, z = b.coords
    a2, b2, c2 = tri.squares
    return Bary(a2 * y * z, b2 * x * z, c2 * x * y)


def isotomic_conjugate(b: Bary) -> Bary:
    if b.zeros():
        raise OnSideline(f"{b!r} lies on a sideline")
    x, y, z = b.coords
    return Bary(y * z, x * z, x * y)


def signed_ratio(t: Bary) -> Fraction:
    """Signed ratio along the oriented side B->C, C->A or A->B.

    For (0:u:v) on BC this is BP:PC = v/u; cyclically CP:PA = u/v on CA and
    AP:PB = v/u on AB.
    """
    i = side_index(t)
    x, y, z = (as_fraction(c) for c in t.coords)
    if i == 0:
        return z / y
    if i == 1:
        return x / z
    return y / x


def trace_signs(traces: "TraceSet") -> str:
    """'+' for a trace inside its side segment, '-' outside (lines drawn outside)."""
    return "".join("+" if signed_ratio(t) > 0 else "-" for t in traces)


@dataclass(frozen=True)
class TraceSet:
    a: Bary
    b: Bary
    c: Bary

    def __post_init__(self):
        for expected, t in enumerate((self.a, self.b, self.c)):
            if side_index(t) != expected:
                raise NotOnSideline(f"trace {t!r} is not on side {SIDES[expected]}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[Rational]]) -> "TraceSet":
        """Build from [u, v] pairs: (0:u:v) on BC, (u:0:v) on CA, (u:v:0) on AB."""
        (au, av), (bu, bv), (cu, cv) = [(as_fraction(u), as_fraction(v)) for u, v in pairs]
        return cls(Bary(0, au, av), Bary(bu, 0, bv), Bary(cu, cv, 0))

    def __iter__(self) -> Iterator[Bary]:
        return iter((self.a, self.b, self.c))

    def map(self, fn: Callable[[Bary], Bary]) -> "TraceSet":
        return TraceSet(*(fn(t) for t in self))

    def to_pairs(self):
        return [
            [str(c) for i, c in enumerate(t.coords) if i != side] for side, t in enumerate(self)
        ]


def proportional_isotomic_traces(rho: Rational) -> TraceSet:
    """Traces with BA1/A1C = CB1/B1A = AC1/C1B = rho."""
    rho = as_fraction(rho)
    return TraceSet(Bary(0, 1, rho), Bary(rho, 0, 1), Bary(1, rho, 0))


def perpendicular_foot(p: ProjPoint, l: ProjLine) -> ProjPoint:
    if not p.is_finite:
        raise PointAtInfinity(f"{p!r} is at infinity")
    if l == LINE_AT_INFINITY:
        raise PointAtInfinity("the line at infinity has no perpendicular")
    px, py = p.cartesian()
    t = Fraction(l.u * px + l.v * py + l.w, l.u * l.u + l.v * l.v)
    return ProjPoint.from_cartesian(px - t * l.u, py - t * l.v)


# Rational centres, from squared side lengths.


def centroid() -> Bary:
    return Bary(1, 1, 1)


def symmedian_point(tri: Triangle) -> Bary:
    return Bary(tri.squares)


def _conway(tri: Triangle) -> Tuple[Fraction, Fraction, Fraction]:
    a2, b2, c2 = tri.squares
    return (b2 + c2 - a2) / 2, (c2 + a2 - b2) / 2, (a2 + b2 - c2) / 2


def circumcenter(tri: Triangle) -> Bary:
    a2, b2, c2 = tri.squares
    sa, sb, sc = _conway(tri)
    return Bary(a2 * sa, b2 * sb, c2 * sc)


def orthocenter(tri: Triangle) -> Bary:
    sa, sb, sc = _conway(tri)
    return Bary(sb * sc, sc * sa, sa * sb)

import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    ConcurrencyViolation,
    DegenerateConfiguration,
    DegeneratePair,
    HexagonPointAtInfinity,
)
from .projective import Homogeneous, ProjLine, ProjPoint, join, meet, proj_equal
from .references import get_id_for_object
from .triangle import (
    TraceSet,
    Triangle,
    bary_to_proj,
    isogonal_trace,
    isotomic_trace,
    perpendicular_foot,
)


class ModeKind(str, enum.Enum):
    ISOGONAL = "isogonal"
    ISOTOMIC = "isotomic"
    FREE = "free"


@dataclass(frozen=True)
class Mode:
    kind: ModeKind
    second: Optional[TraceSet] = None

    def __post_init__(self):
        if (self.kind is ModeKind.FREE) != (self.second is not None):
            raise ValueError("free mode needs an explicit second trace set, and only free mode takes one")

    @classmethod
    def isogonal(cls) -> "Mode":
        return cls(ModeKind.ISOGONAL)

    @classmethod
    def isotomic(cls) -> "Mode":
        return cls(ModeKind.ISOTOMIC)

    @classmethod
    def free(cls, second: TraceSet) -> "Mode":
        return cls(ModeKind.FREE, second)

    @classmethod
    def parse(cls, name: str, second: Optional[TraceSet] = None) -> "Mode":
        return cls(ModeKind(name.lower()), second)

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def is_symmetric(self) -> bool:
        """Isogonal and isotomic modes, where the concurrency theorems are asserted at build time."""
        return self.kind is not ModeKind.FREE

    def partner_traces(self, tri: Triangle, traces: TraceSet) -> TraceSet:
        if self.kind is ModeKind.ISOGONAL:
            return traces.map(lambda t: isogonal_trace(tri, t))
        if self.kind is ModeKind.ISOTOMIC:
            return traces.map(isotomic_trace)
        return self.second


@dataclass(frozen=True)
class Feet:
    h_a: ProjPoint
    h_b: ProjPoint
    h_c: ProjPoint
    h_a_prime: ProjPoint
    h_b_prime: ProjPoint
    h_c_prime: ProjPoint

    def __iter__(self):
        return iter((self.h_a, self.h_b, self.h_c, self.h_a_prime, self.h_b_prime, self.h_c_prime))


@dataclass(frozen=True)
class DerivedPoints:
    """A', B', C' of the lemma, A2.. of the Pappus corollary, A3.. of the Pascal corollary."""

    a_persp: Optional[ProjPoint]
    b_persp: Optional[ProjPoint]
    c_persp: Optional[ProjPoint]
    a2: Optional[ProjPoint]
    b2: Optional[ProjPoint]
    c2: Optional[ProjPoint]
    a3: Optional[ProjPoint]
    b3: Optional[ProjPoint]
    c3: Optional[ProjPoint]

    def named(self) -> Dict[str, Optional[ProjPoint]]:
        return {
            "A'": self.a_persp,
            "B'": self.b_persp,
            "C'": self.c_persp,
            "A2": self.a2,
            "B2": self.b2,
            "C2": self.c2,
            "A3": self.a3,
            "B3": self.b3,
            "C3": self.c3,
        }


@dataclass(frozen=True)
class Configuration:
    triangle: Triangle
    mode: Mode
    traces: TraceSet
    traces_prime: TraceSet
    l_a: ProjLine
    l_b: ProjLine
    l_c: ProjLine
    l_a_prime: ProjLine
    l_b_prime: ProjLine
    l_c_prime: ProjLine
    x: ProjPoint
    y: ProjPoint
    z: ProjPoint
    x_prime: ProjPoint
    y_prime: ProjPoint
    z_prime: ProjPoint
    a1: ProjPoint
    b1: ProjPoint
    c1: ProjPoint
    a1_prime: ProjPoint
    b1_prime: ProjPoint
    c1_prime: ProjPoint
    r: ProjPoint
    r_prime: ProjPoint
    q: ProjPoint
    feet: Optional[Feet] = field(default=None, compare=False)

    @property
    def lines(self) -> Tuple[ProjLine, ...]:
        """The six cevian lines in the order l_A, l'_A, l_B, l'_B, l_C, l'_C."""
        return (self.l_a, self.l_a_prime, self.l_b, self.l_b_prime, self.l_c, self.l_c_prime)

    @property
    def hexagon(self) -> Tuple[ProjPoint, ...]:
        return (self.x, self.y, self.z, self.x_prime, self.y_prime, self.z_prime)

    @property
    def trace_points(self) -> Tuple[ProjPoint, ...]:
        """A1, A1', B1, B1', C1, C1'."""
        return (self.a1, self.a1_prime, self.b1, self.b1_prime, self.c1, self.c1_prime)

    def named_objects(self) -> Dict[str, Homogeneous]:
        names = ["l_A", "l_B", "l_C", "l'_A", "l'_B", "l'_C", "X", "Y", "Z", "X'", "Y'", "Z'"]
        names += ["A1", "B1", "C1", "A1'", "B1'", "C1'", "R", "R'", "Q"]
        values = [
            self.l_a, self.l_b, self.l_c, self.l_a_prime, self.l_b_prime, self.l_c_prime,
            self.x, self.y, self.z, self.x_prime, self.y_prime, self.z_prime,
            self.a1, self.b1, self.c1, self.a1_prime, self.b1_prime, self.c1_prime,
            self.r, self.r_prime, self.q,
        ]  # fmt: skip
        objects = dict(zip(names, values))
        if self.feet is not None:
            feet_names = ["H_A", "H_B", "H_C", "H'_A", "H'_B", "H'_C"]
            objects.update(zip(feet_names, self.feet))
        return objects

    def to_dict(self) -> dict:
        data = {
            "mode": self.mode.name,
            **self.triangle.to_dict(),
            "traces": self.traces.to_pairs(),
            "traces_prime": self.traces_prime.to_pairs(),
            "objects": {k: v.to_list() for k, v in self.named_objects().items()},
        }
        return data

    @property
    def fingerprint(self) -> str:
        return get_id_for_object(self.to_dict())[:16]


def _join(name: str, p: ProjPoint, q: ProjPoint) -> ProjLine:
    try:
        return join(p, q)
    except CoincidentPoints as e:
        raise DegenerateConfiguration(f"{name}: {e}") from e


def _meet(name: str, l: ProjLine, m: ProjLine) -> ProjPoint:
    try:
        return meet(l, m)
    except CoincidentLines as e:
        raise DegenerateConfiguration(f"{name}: {e}") from e


def common_point(name: str, pairs: Sequence[Tuple[ProjPoint, ProjPoint]], check: bool) -> ProjPoint:
    """Common point of the lines through each pair.

    A pair whose points coincide gives no line and is skipped. When every
    pair collapses onto the same point that point is returned.
    """
    lines: List[ProjLine] = []
    collapsed: List[ProjPoint] = []
    for p, q in pairs:
        if proj_equal(p, q):
            collapsed.append(p)
        else:
            line = join(p, q)
            if line not in lines:
                lines.append(line)
    if len(lines) >= 2:
        point = meet(lines[0], lines[1])
        if check and not all(l.contains(point) for l in lines[2:]):
            raise ConcurrencyViolation(f"{name}: lines {lines} are not concurrent")
        return point
    if collapsed and all(proj_equal(c, collapsed[0]) for c in collapsed):
        if all(l.contains(collapsed[0]) for l in lines):
            return collapsed[0]
    raise DegenerateConfiguration(f"{name}: undefined, pairs {list(pairs)} give fewer than two lines")


def build_configuration(tri: Triangle, traces: TraceSet, mode: Mode) -> Configuration:
    traces_prime = mode.partner_traces(tri, traces)
    A, B, C = tri.vertices
    a1, b1, c1 = (bary_to_proj(tri, t) for t in traces)
    a1p, b1p, c1p = (bary_to_proj(tri, t) for t in traces_prime)

    l_a, l_b, l_c = _join("l_A", A, a1), _join("l_B", B, b1), _join("l_C", C, c1)
    l_ap, l_bp, l_cp = _join("l'_A", A, a1p), _join("l'_B", B, b1p), _join("l'_C", C, c1p)

    x, y, z = _meet("X", l_b, l_cp), _meet("Y", l_c, l_ap), _meet("Z", l_a, l_bp)
    xp, yp, zp = _meet("X'", l_bp, l_c), _meet("Y'", l_cp, l_a), _meet("Z'", l_ap, l_b)

    check = mode.is_symmetric
    try:
        r = common_point("R", [(A, x), (B, y), (C, z)], check)
        rp = common_point("R'", [(A, xp), (B, yp), (C, zp)], check)
        q = common_point("Q", [(x, xp), (y, yp), (z, zp), (r, rp)], check)
    except (CoincidentPoints, CoincidentLines) as e:
        raise DegenerateConfiguration(str(e)) from e

    cfg = Configuration(
        tri, mode, traces, traces_prime,
        l_a, l_b, l_c, l_ap, l_bp, l_cp,
        x, y, z, xp, yp, zp,
        a1, b1, c1, a1p, b1p, c1p,
        r, rp, q,
    )  # fmt: skip
    try:
        feet = h_points(cfg)
    except HexagonPointAtInfinity:
        logging.debug("hexagon point at infinity, configuration carries no feet")
        return cfg
    object.__setattr__(cfg, "feet", feet)
    return cfg


def h_points(cfg: Configuration) -> Feet:
    """Feet of the perpendiculars from X, Y, Z (and primes) to BC, CA, AB."""
    names = ("X", "Y", "Z", "X'", "Y'", "Z'")
    for name, p in zip(names, cfg.hexagon):
        if not p.is_finite:
            raise HexagonPointAtInfinity(f"{name} = {p!r} is at infinity")
    sides = cfg.triangle.sidelines * 2
    return Feet(*(perpendicular_foot(p, side) for p, side in zip(cfg.hexagon, sides)))


def _meet_of(name, p, q, r, s, strict: bool) -> Optional[ProjPoint]:
    try:
        return _meet(name, _join(name, p, q), _join(name, r, s))
    except DegenerateConfiguration:
        if strict:
            raise
        return None


DerivedTriple = Tuple[Optional[ProjPoint], Optional[ProjPoint], Optional[ProjPoint]]


def perspective_points(cfg: Configuration, strict: bool = True) -> DerivedTriple:
    """A' = YZ.Y'Z', B' = ZX.Z'X', C' = XY.X'Y'."""
    x, y, z, xp, yp, zp = cfg.hexagon
    return (
        _meet_of("A'", y, z, yp, zp, strict),
        _meet_of("B'", z, x, zp, xp, strict),
        _meet_of("C'", x, y, xp, yp, strict),
    )


def pappus_points(cfg: Configuration, strict: bool = True) -> DerivedTriple:
    """A2 = C1B1.C1'B1' and cyclic."""
    a1, a1p, b1, b1p, c1, c1p = cfg.trace_points
    return (
        _meet_of("A2", c1, b1, c1p, b1p, strict),
        _meet_of("B2", a1, c1, a1p, c1p, strict),
        _meet_of("C2", b1, a1, b1p, a1p, strict),
    )


def pascal_points(cfg: Configuration, strict: bool = True) -> DerivedTriple:
    """A3 = A1C1'.B1A1' and cyclic; defined even when every trace pair collapses."""
    a1, a1p, b1, b1p, c1, c1p = cfg.trace_points
    return (
        _meet_of("A3", a1, c1p, b1, a1p, strict),
        _meet_of("B3", b1, a1p, c1, b1p, strict),
        _meet_of("C3", c1, b1p, a1, c1p, strict),
    )


def derived_points(cfg: Configuration, strict: bool = True) -> DerivedPoints:
    return DerivedPoints(*perspective_points(cfg, strict), *pappus_points(cfg, strict), *pascal_points(cfg, strict))


def cross_points(tri1: Sequence[ProjPoint], tri2: Sequence[ProjPoint]) -> Tuple[ProjPoint, ...]:
    """Meets of the sidelines of tri2 with the sidelines of tri1, ordered A1, A1', B1, B1', C1, C1'.

    Side B'C' gives C1 on AB and B1' on AC; C'A' gives A1 on BC and C1' on BA;
    A'B' gives B1 on CA and A1' on CB.
    """
    A, B, C = tri1
    Ap, Bp, Cp = tri2
    try:
        ab, bc, ca = join(A, B), join(B, C), join(C, A)
        bcp, cap, abp = join(Bp, Cp), join(Cp, Ap), join(Ap, Bp)
    except CoincidentPoints as e:
        raise DegeneratePair(f"triangle with repeated vertices: {e}") from e
    for vertex, side in ((Ap, bc), (Bp, ca), (Cp, ab), (A, bcp), (B, cap), (C, abp)):
        if side.contains(vertex):
            raise DegeneratePair(f"{vertex!r} lies on the corresponding sideline {side!r}")
    try:
        points = (
            meet(cap, bc), meet(abp, bc),
            meet(abp, ca), meet(bcp, ca),
            meet(bcp, ab), meet(cap, ab),
        )  # fmt: skip
    except CoincidentLines as e:
        raise DegeneratePair(f"sidelines coincide: {e}") from e
    for p in points:
        if not p.is_finite or p in (A, B, C):
            raise DegeneratePair(f"cross point {p!r} is at infinity or at a vertex")
    if len(set(points)) != 6:
        raise DegeneratePair("cross points are not distinct")
    return points

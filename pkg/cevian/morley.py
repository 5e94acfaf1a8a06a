"""The angle-parametrized cevian family, in floating point.

For a triangle ABC and a ratio k, the lines l_A, l'_A make the angle k*A with
AB and AC respectively (inside the triangle for k > 0), and similarly at B
and C. The concurrency point R(k) of the resulting configuration traces a
self-isogonal curve through the incenter (k = 1/2), the second Morley centre
(k = 1/3) and the orthocenter (k = -1). This is the only module that uses
floats; comparisons go through NumBary with the tolerance from
CEVIAN_TOLERANCE.
"""
import logging
import math
import os
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .errors import CevianError, DegenerateInput, PerspectorNotFound, PointAtInfinity, RayMiss, TangentPole
from .triangle import Triangle

LIMIT_WINDOW = 1e-7
POLE_WINDOW = 1e-9
THIN_ANGLE = 1e-2
ANCHORS = (-1.0, 0.0, 1 / 3, 0.5, 2 / 3, 1.0)


def tolerance() -> float:
    return float(os.environ.get("CEVIAN_TOLERANCE", "1e-9"))


class NumBary:
    """Barycentric coordinates normalized to x + y + z = 1."""

    __slots__ = ("coords",)

    def __init__(self, x, y=None, z=None):
        v = np.asarray(x if y is None else (x, y, z), dtype=float)
        s = v.sum()
        if not np.all(np.isfinite(v)) or not np.isfinite(s) or abs(s) < 1e-300:
            raise PointAtInfinity(f"barycentrics {v} do not normalize")
        self.coords = v / s

    def distance(self, other: "NumBary") -> float:
        return float(np.max(np.abs(self.coords - other.coords)))

    def close(self, other: "NumBary", tol: Optional[float] = None) -> bool:
        return self.distance(other) <= (tolerance() if tol is None else tol)

    def __iter__(self):
        return iter(float(c) for c in self.coords)

    def __repr__(self):
        return f"NumBary({', '.join(format(c, '.12g') for c in self)})"


@dataclass(frozen=True)
class NumTri:
    a_xy: Tuple[float, float]
    b_xy: Tuple[float, float]
    c_xy: Tuple[float, float]

    def __post_init__(self):
        for name in ("a_xy", "b_xy", "c_xy"):
            object.__setattr__(self, name, tuple(float(c) for c in getattr(self, name)))
        if abs(self.cross2) <= 1e-12 * max(self.sides) ** 2:
            raise DegenerateInput("triangle vertices are collinear")
        if abs(sum(self.angles) - math.pi) > 1e-12:
            raise DegenerateInput(f"angles {self.angles} do not sum to pi")
        if min(self.angles) < THIN_ANGLE:
            logging.warning(f"thin triangle, smallest angle {min(self.angles):.3g}: results are ill-conditioned")

    @classmethod
    def from_triangle(cls, tri: Triangle) -> "NumTri":
        return cls(*((float(x), float(y)) for x, y in (tri.a_xy, tri.b_xy, tri.c_xy)))

    @property
    def points(self) -> np.ndarray:
        return np.array([self.a_xy, self.b_xy, self.c_xy])

    @property
    def cross2(self) -> float:
        a, b, c = self.points
        return _cross2(b - a, c - a)

    @property
    def sides(self) -> Tuple[float, float, float]:
        a, b, c = self.points
        return (float(np.linalg.norm(c - b)), float(np.linalg.norm(a - c)), float(np.linalg.norm(b - a)))

    @property
    def angles(self) -> Tuple[float, float, float]:
        p = self.points
        result = []
        for i in range(3):
            u, v = p[(i + 1) % 3] - p[i], p[(i + 2) % 3] - p[i]
            result.append(math.atan2(abs(_cross2(u, v)), float(np.dot(u, v))))
        return tuple(result)

    def to_cartesian(self, b: NumBary) -> np.ndarray:
        return b.coords @ self.points

    def to_bary(self, point: Sequence[float]) -> NumBary:
        a, b, c = self.points
        p = np.asarray(point, dtype=float)
        area = self.cross2
        return NumBary(_cross2(b - p, c - p) / area, _cross2(c - p, a - p) / area, _cross2(a - p, b - p) / area)


def _cross2(u, v) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def _check_k(k: float):
    if not -1.0 <= k <= 1.0:
        raise ValueError(f"k = {k} outside [-1, 1]")


# Closed forms.


def angle_point(tri: NumTri) -> NumBary:
    """(A : B : C), the common limit of R(k) and D(k) at k = 0."""
    return NumBary(tri.angles)


def r_at_one(tri: NumTri) -> NumBary:
    return NumBary([math.sin(t) ** 2 / t for t in tri.angles])


def r_of_k(tri: NumTri, k: float) -> NumBary:
    _check_k(k)
    if abs(k) < LIMIT_WINDOW:
        return angle_point(tri)
    if abs(1 - k) < LIMIT_WINDOW:
        return r_at_one(tri)
    t = np.array(tri.angles)
    return NumBary(np.sin(t) * np.sin(k * t) / np.sin((1 - k) * t))


def d_of_k(tri: NumTri, k: float) -> NumBary:
    _check_k(k)
    if abs(k) < LIMIT_WINDOW:
        return angle_point(tri)
    t = np.array(tri.angles) * k
    for angle in t:
        if abs(abs(angle) - math.pi / 2) < POLE_WINDOW:
            raise TangentPole(f"k * angle = {angle} is a pole of the tangent")
    return NumBary(np.tan(t))


def isogonal_conjugate(tri: NumTri, b: NumBary) -> NumBary:
    if np.any(np.abs(b.coords) < 1e-300):
        raise PointAtInfinity(f"{b!r} lies on a sideline")
    return NumBary(np.array(tri.sides) ** 2 / b.coords)


# Centres from side lengths.


def _conway(tri: NumTri) -> np.ndarray:
    a2, b2, c2 = np.array(tri.sides) ** 2
    return np.array([b2 + c2 - a2, c2 + a2 - b2, a2 + b2 - c2]) / 2


def known_centers(tri: NumTri) -> Dict[str, NumBary]:
    a, b, c = tri.sides
    s = (a + b + c) / 2
    sa, sb, sc = _conway(tri)
    sq = np.array(tri.sides) ** 2
    return {
        "centroid": NumBary(1.0, 1.0, 1.0),
        "incenter": NumBary(a, b, c),
        "orthocenter": NumBary(sb * sc, sc * sa, sa * sb),
        "circumcenter": NumBary(sq * np.array([sa, sb, sc])),
        "gergonne": NumBary(1 / (s - a), 1 / (s - b), 1 / (s - c)),
        "symmedian": NumBary(sq),
        "angle_point": angle_point(tri),
    }


# Constructive configuration.


def _line(p, q) -> np.ndarray:
    return np.cross(np.append(p, 1.0), np.append(q, 1.0))


def _meet(l, m, what: str) -> np.ndarray:
    h = np.cross(l, m)
    norm = np.linalg.norm(h)
    if norm == 0 or abs(h[2]) <= 1e-14 * norm:
        raise RayMiss(f"{what}: lines do not meet at a finite point")
    return h[:2] / h[2]


def _ray(p, toward, other, theta: float) -> np.ndarray:
    """Line through p, turned from the direction p->toward by theta, positive toward `other`."""
    u = (toward - p) / np.linalg.norm(toward - p)
    sign = 1.0 if _cross2(u, other - p) > 0 else -1.0
    c, s = math.cos(sign * theta), math.sin(sign * theta)
    d = np.array([c * u[0] - s * u[1], s * u[0] + c * u[1]])
    return _line(p, p + d)


class NumericConfiguration(NamedTuple):
    tri: NumTri
    k: float
    lines: Dict[str, np.ndarray]
    hexagon: Dict[str, np.ndarray]
    r: np.ndarray
    r_prime: np.ndarray
    q: np.ndarray
    d: np.ndarray


def _common_point(tri: NumTri, what: str, pairs, tol: float) -> np.ndarray:
    scale = max(tri.sides)
    lines, collapsed = [], []
    for p, q in pairs:
        if np.linalg.norm(p - q) <= tol * scale:
            collapsed.append(p)
        else:
            lines.append(_line(p, q))
    if len(lines) >= 2:
        return _meet(lines[0], lines[1], what)
    if collapsed:
        return collapsed[0]
    raise RayMiss(f"{what}: fewer than two lines")


def build_numeric_config(tri: NumTri, k: float) -> NumericConfiguration:
    _check_k(k)
    if k in (-1.0, 0.0, 1.0):
        raise ValueError(f"k = {k}: the lines degenerate into sidelines or the construction is undefined")
    A, B, C = tri.points
    ta, tb, tc = (k * t for t in tri.angles)
    lines = {
        "l_A": _ray(A, B, C, ta),
        "l'_A": _ray(A, C, B, ta),
        "l_B": _ray(B, C, A, tb),
        "l'_B": _ray(B, A, C, tb),
        "l_C": _ray(C, A, B, tc),
        "l'_C": _ray(C, B, A, tc),
    }
    sides = {"A": _line(B, C), "B": _line(C, A), "C": _line(A, B)}
    for v in "ABC":
        for name in (f"l_{v}", f"l'_{v}"):
            _meet(lines[name], sides[v], f"{name} with the opposite sideline")

    hexagon = {
        "X": _meet(lines["l_B"], lines["l'_C"], "X"),
        "Y": _meet(lines["l_C"], lines["l'_A"], "Y"),
        "Z": _meet(lines["l_A"], lines["l'_B"], "Z"),
        "X'": _meet(lines["l'_B"], lines["l_C"], "X'"),
        "Y'": _meet(lines["l'_C"], lines["l_A"], "Y'"),
        "Z'": _meet(lines["l'_A"], lines["l_B"], "Z'"),
    }
    tol = tolerance()
    x, y, z, xp, yp, zp = hexagon.values()
    r = _common_point(tri, "R", [(A, x), (B, y), (C, z)], tol)
    rp = _common_point(tri, "R'", [(A, xp), (B, yp), (C, zp)], tol)
    q = _common_point(tri, "Q", [(x, xp), (y, yp), (z, zp), (r, rp)], tol)

    feet = [_foot(p, sides[v]) for p, v in zip((x, y, z), "ABC")]
    d = _common_point(tri, "D", [(A, feet[0]), (B, feet[1]), (C, feet[2])], tol)

    cfg = NumericConfiguration(tri, k, lines, hexagon, r, rp, q, d)
    closed = r_of_k(tri, k)
    if not tri.to_bary(r).close(closed, 1e3 * tol):
        logging.warning(f"constructed R({k}) = {tri.to_bary(r)!r} disagrees with closed form {closed!r}")
    return cfg


def _foot(p: np.ndarray, line: np.ndarray) -> np.ndarray:
    u, v, w = line
    t = (u * p[0] + v * p[1] + w) / (u * u + v * v)
    return p - t * np.array([u, v])


def q_of_k(tri: NumTri, k: float) -> NumBary:
    """Q(k) by construction.

    config(1 - k) is config(k) with every l and l' exchanged, so Q(k) = Q(1 - k)
    and both ends of (0, 1) approach R(0), not R(1).
    """
    _check_k(k)
    if abs(k) < LIMIT_WINDOW or abs(1 - k) < LIMIT_WINDOW:
        return angle_point(tri)
    return tri.to_bary(build_numeric_config(tri, k).q)


def d_constructive(tri: NumTri, k: float) -> NumBary:
    """Concurrency point of the cevians through the perpendicular feet of X, Y, Z."""
    return tri.to_bary(build_numeric_config(tri, k).d)


# Morley.


def morley_triangle(tri: NumTri) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Meets of adjacent angle trisectors; the vertex near BC first."""
    h = build_numeric_config(tri, 1 / 3).hexagon
    return h["X"], h["Y"], h["Z"]


def second_morley_center(tri: NumTri) -> NumBary:
    """Perspector of the triangle and its Morley triangle."""
    x, y, z = morley_triangle(tri)
    A, B, C = tri.points
    p = _meet(_line(A, x), _line(B, y), "AX with BY")
    cz = _line(C, z)
    residual = abs(cz @ np.append(p, 1.0)) / np.linalg.norm(cz[:2])
    if residual > 10 * tolerance() * max(tri.sides):
        raise PerspectorNotFound(f"CZ misses the meet of AX and BY by {residual}")
    return tri.to_bary(p)


# Curves.

CURVES = {
    "r": r_of_k,
    "d": d_of_k,
    "q": q_of_k,
}


class CurveSample(NamedTuple):
    k: float
    point: Optional[NumBary]
    note: str = ""


def sample_curve(tri: NumTri, grid: Sequence[float], curve: str = "r") -> List[CurveSample]:
    """(k, point) per grid value; values where the curve is undefined carry a note instead."""
    fn = CURVES[curve]
    samples = []
    for k in grid:
        _check_k(k)
        try:
            samples.append(CurveSample(k, fn(tri, k)))
        except (CevianError, ValueError) as e:
            logging.info(f"{curve}({k}) skipped: {e}")
            samples.append(CurveSample(k, None, str(e)))
    return samples


def with_anchors(grid: Sequence[float]) -> List[float]:
    return sorted(set(float(k) for k in grid) | set(ANCHORS))


def limit_slopes(tri: NumTri, epsilons: Sequence[float] = (1e-2, 1e-3, 1e-4)) -> pd.DataFrame:
    """Distance of R(eps) from R(0) and of R(1 - eps) from R(1), divided by eps."""
    r0, r1 = angle_point(tri), r_at_one(tri)
    rows = []
    for eps in epsilons:
        near0 = r_of_k(tri, eps).distance(r0)
        near1 = r_of_k(tri, 1 - eps).distance(r1)
        rows.append({"eps": eps, "near_0": near0, "near_1": near1, "slope_0": near0 / eps, "slope_1": near1 / eps})
    return pd.DataFrame(rows)


def _fmt(value: float) -> str:
    return format(value, ".17g")


def curve_frame(tri: NumTri, samples: Sequence[CurveSample]) -> pd.DataFrame:
    rows = []
    for s in samples:
        if s.point is None:
            continue
        cx, cy = tri.to_cartesian(s.point)
        x, y, z = s.point
        rows.append({"k": s.k, "x": x, "y": y, "z": z, "cartesian_x": cx, "cartesian_y": cy})
    return pd.DataFrame(rows, columns=["k", "x", "y", "z", "cartesian_x", "cartesian_y"])


def to_csv(tri: NumTri, samples: Sequence[CurveSample]) -> str:
    """CSV text; undefined samples become '#' comment rows in place."""
    lines = ["k,x,y,z,cartesian_x,cartesian_y"]
    for s in samples:
        if s.point is None:
            lines.append(f"# k={_fmt(s.k)} skipped: {s.note}")
            continue
        cx, cy = tri.to_cartesian(s.point)
        lines.append(",".join(_fmt(v) for v in (s.k, *s.point, cx, cy)))
    return "\n".join(lines) + "\n"

"""SVG drawing of a Configuration.

Presentational only: coordinates are converted to floats here and rounded to
a fixed precision so identical configurations give byte-identical files.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import svgwrite

from .conics import Conic, conic_through_points, conic_tangent_to_lines, dual_conic
from .core import Configuration
from .errors import CevianError
from .projective import ProjLine, ProjPoint

CONIC_SAMPLES = 512
MARGIN = 0.15
PRECISION = 3


def _scaled(values: Sequence[int]) -> np.ndarray:
    """Floats proportional to a (possibly huge) integer vector."""
    top = max(abs(v) for v in values) or 1
    return np.array([v / top for v in values], dtype=float)


def _xy(p: ProjPoint) -> np.ndarray:
    x, y = p.cartesian()
    return np.array([float(x), float(y)])


class Viewport:
    """World box around the figure and its map to SVG pixels (y pointing down)."""

    def __init__(self, points: Iterable[np.ndarray], size: int):
        pts = np.array(list(points))
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        span = max(float(np.max(hi - lo)), 1e-9)
        self.lo = lo - MARGIN * span
        self.hi = hi + MARGIN * span
        self.scale = size / float(np.max(self.hi - self.lo))
        self.width = round(float(self.hi[0] - self.lo[0]) * self.scale)
        self.height = round(float(self.hi[1] - self.lo[1]) * self.scale)

    def contains(self, p: np.ndarray) -> bool:
        return bool(np.all(p >= self.lo) and np.all(p <= self.hi))

    def px(self, p: np.ndarray) -> Tuple[float, float]:
        x = (p[0] - self.lo[0]) * self.scale
        y = (self.hi[1] - p[1]) * self.scale
        return round(float(x), PRECISION), round(float(y), PRECISION)

    def clip(self, line: ProjLine) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        """Segment of a line inside the box, or None if it misses."""
        u, v, w = _scaled(line.coords)
        hits = []
        for x in (self.lo[0], self.hi[0]):
            if v != 0:
                y = -(u * x + w) / v
                if self.lo[1] <= y <= self.hi[1]:
                    hits.append(np.array([x, y]))
        for y in (self.lo[1], self.hi[1]):
            if u != 0:
                x = -(v * y + w) / u
                if self.lo[0] <= x <= self.hi[0]:
                    hits.append(np.array([x, y]))
        if len(hits) < 2:
            return None
        hits.sort(key=lambda p: (p[0], p[1]))
        return hits[0], hits[-1]


def sample_conic(conic: Conic, start: ProjPoint, n: int = CONIC_SAMPLES) -> np.ndarray:
    """Points of a conic from a known point on it, one per direction of the pencil through it.

    Rows are homogeneous triples; points at infinity have z = 0.
    """
    m = _scaled([v for row in conic.matrix for v in row]).reshape(3, 3)
    p0 = _scaled(start.coords)
    p0 = p0 / np.linalg.norm(p0)
    theta = np.linspace(0.0, np.pi, n, endpoint=False)
    d = np.stack([np.cos(theta), np.sin(theta), np.zeros_like(theta)], axis=1)
    pmd = d @ m @ p0
    dmd = np.einsum("ij,jk,ik->i", d, m, d)
    with np.errstate(divide="ignore", invalid="ignore"):
        s = -dmd / (2 * pmd)
    pts = s[:, None] * p0[None, :] + d
    tangent = ~np.isfinite(s)
    pts[tangent] = p0
    return pts


def _polylines(points: np.ndarray, view: Viewport) -> List[List[np.ndarray]]:
    """Split sampled homogeneous points into runs that stay inside the viewport.

    The sweep is periodic, so a run reaching the last sample continues into the
    first one.
    """
    runs, current = [], []
    inside = [abs(h[2]) > 1e-12 and view.contains(h[:2] / h[2]) for h in points]
    for h, ok in zip(points, inside):
        if ok:
            current.append(h[:2] / h[2])
        elif current:
            runs.append(current)
            current = []
    if current:
        if not runs:
            runs.append(current + [current[0]])
        elif inside[0]:
            runs[0] = current + runs[0]
        else:
            runs.append(current)
    return [r for r in runs if len(r) > 1]


def _inscribed_conic(cfg: Configuration) -> Optional[Tuple[Conic, ProjPoint]]:
    try:
        dual = conic_tangent_to_lines(*cfg.lines[:5])
        return dual_conic(dual), dual.tangency_point(cfg.l_a)
    except CevianError as e:
        logging.warning(f"inscribed conic skipped: {e}")
        return None


def _trace_conic(cfg: Configuration) -> Optional[Tuple[Conic, ProjPoint]]:
    try:
        return conic_through_points(*cfg.trace_points[:5]), cfg.a1
    except CevianError as e:
        logging.warning(f"trace conic skipped: {e}")
        return None


def _finite(named: Sequence[Tuple[str, ProjPoint]]) -> List[Tuple[str, np.ndarray]]:
    result = []
    for name, p in named:
        if p.is_finite:
            result.append((name, _xy(p)))
        else:
            logging.warning(f"{name} is at infinity and is not drawn")
    return result


def render(cfg: Configuration, size: int = 800) -> svgwrite.Drawing:
    labelled = _finite(
        [
            ("X", cfg.x), ("Y", cfg.y), ("Z", cfg.z),
            ("X'", cfg.x_prime), ("Y'", cfg.y_prime), ("Z'", cfg.z_prime),
            ("R", cfg.r), ("R'", cfg.r_prime), ("Q", cfg.q),
        ]
    )  # fmt: skip
    vertices = [_xy(v) for v in cfg.triangle.vertices]
    view = Viewport(vertices + [p for _, p in labelled], size)

    dwg = svgwrite.Drawing(size=(view.width, view.height), profile="full", debug=False)
    dwg.add(dwg.rect(insert=(0, 0), size=(view.width, view.height), fill="white"))
    dwg.add(dwg.polygon([view.px(v) for v in vertices], fill="none", stroke="black", class_="triangle"))

    for name, line in zip(("l_A", "l'_A", "l_B", "l'_B", "l_C", "l'_C"), cfg.lines):
        segment = view.clip(line)
        if segment is None:
            logging.warning(f"{name} misses the viewport")
            continue
        colour = "steelblue" if "'" not in name else "darkorange"
        start, end = view.px(segment[0]), view.px(segment[1])
        dwg.add(dwg.line(start, end, stroke=colour, class_="cevian", id=name.replace("'", "p")))

    for kind, found in (("inscribed", _inscribed_conic(cfg)), ("traces", _trace_conic(cfg))):
        if found is None:
            continue
        conic, start = found
        colour = "seagreen" if kind == "inscribed" else "purple"
        for run in _polylines(sample_conic(conic, start), view):
            dwg.add(dwg.polyline([view.px(p) for p in run], fill="none", stroke=colour, class_=f"conic {kind}"))

    for name, p in labelled:
        x, y = view.px(p)
        dwg.add(dwg.circle(center=(x, y), r=3, fill="black", class_="point"))
        dwg.add(dwg.text(name, insert=(round(x + 5, PRECISION), round(y - 5, PRECISION)), class_="label"))
    for name, v in zip("ABC", vertices):
        x, y = view.px(v)
        dwg.add(dwg.text(name, insert=(round(x + 5, PRECISION), round(y - 5, PRECISION)), class_="vertex"))
    return dwg


def to_svg(cfg: Configuration, size: int = 800) -> str:
    return render(cfg, size).tostring()


def write_svg(cfg: Configuration, path, size: int = 800):
    logging.info(f"saving figure to {path}")
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_svg(cfg, size))

"""Seeded generators of exact configurations.

Every instance is a pure function of (seed, flavor, mode, index). Degenerate
draws are rejected and redrawn with the next attempt number, at most
MAX_REDRAWS times.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .core import Configuration, Mode, build_configuration, cross_points, derived_points
from .errors import CevianError, GeneratorExhausted
from .projective import ProjLine, ProjPoint, join, meet, span
from .rand import Rand
from .references import GeneratedCell
from .triangle import Bary, TraceSet, Triangle, proj_to_bary

MAX_REDRAWS = 100
FLAVORS = ("trace", "conic", "pairs")
MODES = ("isogonal", "isotomic", "free", "none")


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int
    count: int
    bound: int = 20
    mode: str = "isogonal"
    flavor: str = "trace"

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}, expected one of {FLAVORS}")
        if self.flavor == "conic":
            object.__setattr__(self, "mode", "free")
        elif self.flavor == "pairs":
            object.__setattr__(self, "mode", "none")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.flavor == "trace" and self.mode == "none":
            raise ValueError("trace flavor needs a configuration mode")
        if self.bound < 2:
            raise ValueError(f"bound must be >= 2, got {self.bound}")
        if self.count < 0:
            raise ValueError(f"count must be >= 0, got {self.count}")
        if self.seed < 0:
            raise ValueError(f"seed must be unsigned, got {self.seed}")

    def cell(self, index: int) -> GeneratedCell:
        return GeneratedCell(self.seed, index, self.mode, self.flavor, self.bound)

    def rng(self, index: int, attempt: int) -> Rand:
        return Rand.for_cell(self.seed, self.flavor, self.mode, self.bound, index, attempt)


def random_triangle(rng: Rand, bound: int) -> Triangle:
    return Triangle(*((rng.rational(bound), rng.rational(bound)) for _ in range(3)))


def random_traces(rng: Rand, bound: int) -> TraceSet:
    return TraceSet.from_pairs([(rng.nonzero_rational(bound), rng.nonzero_rational(bound)) for _ in range(3)])


def unit_circle_tangent(t: Fraction) -> ProjLine:
    """Tangent to x^2 + y^2 = z^2 at ((1 - t^2) : 2t : (1 + t^2))."""
    return ProjLine(1 - t * t, 2 * t, -(1 + t * t))


def conic_first_configuration(params: Sequence[Fraction]) -> Configuration:
    """Configuration cut out by six tangents of the unit circle.

    Parameters are taken in the order d_A, d'_A, d_B, d'_B, d_C, d'_C; the
    vertices are the meets of each tangent pair and the configuration is built
    in free mode, keeping the hexagon pairing X = l_B ^ l'_C.
    """
    params = [Fraction(p) for p in params]
    if len(set(params)) != 6:
        raise CevianError(f"conic-first parameters must be six distinct values, got {params}")
    d = [unit_circle_tangent(t) for t in params]
    vertices = [meet(d[0], d[1]), meet(d[2], d[3]), meet(d[4], d[5])]
    tri = Triangle(*(v.cartesian() for v in vertices))

    def trace(line: ProjLine, side: ProjLine) -> Bary:
        return proj_to_bary(tri, meet(line, side))

    sides = tri.sidelines
    traces = TraceSet(*(trace(d[2 * i], sides[i]) for i in range(3)))
    second = TraceSet(*(trace(d[2 * i + 1], sides[i]) for i in range(3)))
    return build_configuration(tri, traces, Mode.free(second))


def _validate(cfg: Configuration, need_feet: bool) -> Configuration:
    if len(set(cfg.lines)) != 6:
        raise CevianError("cevian lines are not distinct")
    if need_feet and cfg.feet is None:
        raise CevianError("hexagon point at infinity")
    derived_points(cfg, strict=True)
    return cfg


def _trace_instance(spec: GeneratorSpec, rng: Rand) -> Configuration:
    tri = random_triangle(rng, spec.bound)
    traces = random_traces(rng, spec.bound)
    second = random_traces(rng, spec.bound) if spec.mode == "free" else None
    cfg = build_configuration(tri, traces, Mode.parse(spec.mode, second))
    return _validate(cfg, need_feet=True)


def _conic_instance(spec: GeneratorSpec, rng: Rand) -> Configuration:
    params = [rng.rational(spec.bound) for _ in range(6)]
    return _validate(conic_first_configuration(params), need_feet=False)


def _pair_instance(spec: GeneratorSpec, rng: Rand, perspective: bool):
    tri1 = random_triangle(rng, spec.bound).vertices
    if perspective:
        p = ProjPoint.from_cartesian(rng.rational(spec.bound), rng.rational(spec.bound))
        tri2 = tuple(span(v, p, 1, rng.nonzero_rational(spec.bound)) for v in tri1)
    else:
        tri2 = random_triangle(rng, spec.bound).vertices
    if not _is_proper(tri2):
        raise CevianError("second triangle is degenerate")
    cross_points(tri1, tri2)
    return tri1, tri2


def _is_proper(tri: Sequence[ProjPoint]) -> bool:
    a, b, c = tri
    return a != b and not join(a, b).contains(c)


def draw(spec: GeneratorSpec, index: int) -> Tuple[object, int]:
    """Instance for (spec, index) together with the number of rejected draws."""
    for attempt in range(MAX_REDRAWS):
        rng = spec.rng(index, attempt)
        try:
            if spec.flavor == "trace":
                return _trace_instance(spec, rng), attempt
            if spec.flavor == "conic":
                return _conic_instance(spec, rng), attempt
            return _pair_instance(spec, rng, perspective=index % 2 == 0), attempt
        except CevianError as e:
            logging.debug(f"rejected draw {attempt} for {spec.flavor}/{spec.mode}#{index}: {e}")
    raise GeneratorExhausted(f"{MAX_REDRAWS} degenerate draws in a row for {spec.cell(index)!r}")


def generate(spec: GeneratorSpec, index: int):
    return draw(spec, index)[0]


def gen_trace_config(spec: GeneratorSpec, index: int) -> Configuration:
    if spec.flavor != "trace":
        raise ValueError(f"gen_trace_config needs the trace flavor, got {spec.flavor!r}")
    return generate(spec, index)


def gen_conic_first(spec: GeneratorSpec, index: int) -> Configuration:
    if spec.flavor != "conic":
        raise ValueError(f"gen_conic_first needs the conic flavor, got {spec.flavor!r}")
    return generate(spec, index)


def gen_perspective_pair(spec: GeneratorSpec, index: int):
    """Even indices give perspective pairs, odd indices unrelated pairs."""
    if spec.flavor != "pairs":
        raise ValueError(f"gen_perspective_pair needs the pairs flavor, got {spec.flavor!r}")
    return generate(spec, index)


def mutate(cfg: Configuration, rng: Rand) -> Configuration:
    """Perturb one primed trace by a factor 1001/1000 on one coordinate and rebuild in free mode."""
    primed = list(cfg.traces_prime)
    start = rng.randint(0, 2)
    for offset in range(3):
        side = (start + offset) % 3
        coords = [Fraction(c) for c in primed[side].coords]
        j = (side + 2) % 3
        coords[j] *= Fraction(1001, 1000)
        trial = list(primed)
        trial[side] = Bary(coords)
        try:
            return build_configuration(cfg.triangle, cfg.traces, Mode.free(TraceSet(*trial)))
        except CevianError as e:
            logging.debug(f"mutation of side {side} rejected: {e}")
    raise GeneratorExhausted("no side admits a non-degenerate mutation")

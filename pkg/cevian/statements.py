"""Executable statements of the cevian theorems.

Each statement reduces a claim to named exact integer witnesses; the claim
holds when every witness is zero. Statements know in which contexts they are
theorems (``applicable``); elsewhere ``check`` reports NA unless the gate is
bypassed, which is how negative controls are evaluated.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .conics import carnot_product, conconic_det, conic_tangent_to_lines
from .core import Configuration, ModeKind, cross_points, pappus_points, pascal_points, perspective_points
from .errors import HexagonPointAtInfinity
from .linalg import cross
from .projective import ProjLine, ProjPoint, bracket, join, proj_equal
from .references import get_id_for_object
from .triangle import isogonal_conjugate, isotomic_conjugate, proj_to_bary

PASS = "PASS"
FAIL = "FAIL"
NA = "NA"
NOFLIP = "NOFLIP"

Witness = Tuple[str, int]


def as_witness(value) -> int:
    """Exact integer standing for a rational value: its numerator."""
    if isinstance(value, Fraction):
        return value.numerator
    return int(value)


@dataclass(frozen=True)
class Verdict:
    statement: str
    status: str
    witnesses: Tuple[Witness, ...] = ()
    fingerprint: str = ""
    mode: str = ""

    @property
    def holds(self) -> bool:
        return self.status == PASS

    def witness(self, name: str) -> int:
        return dict(self.witnesses)[name]

    def to_dict(self):
        return {
            "statement": self.statement,
            "status": self.status,
            "witnesses": {k: str(v) for k, v in self.witnesses},
            "fingerprint": self.fingerprint,
            "mode": self.mode,
        }


def context_of(cfg: Configuration, flavor: Optional[str] = None) -> str:
    """Applicability context: the mode name, or 'conic' for conic-first configurations.

    Without a flavor a free-mode configuration is taken to be conic-first, so the
    direct ``check_*`` helpers evaluate it (and fail it when its lines touch no
    common conic).
    """
    if flavor == "conic" or (flavor is None and cfg.mode.kind is ModeKind.FREE):
        return "conic"
    return cfg.mode.name


class Statement:
    id: str = ""
    applicable: frozenset = frozenset()
    controlled = True

    def witnesses(self, instance) -> List[Witness]:
        raise NotImplementedError(f"{self.__class__.__name__}.witnesses")

    def decide(self, witnesses: Sequence[Witness]) -> bool:
        return all(v == 0 for _, v in witnesses)

    def flipped(self, witnesses: Sequence[Witness]) -> bool:
        """Whether a mutated instance turned the verdict."""
        return not self.decide(witnesses)

    def fingerprint(self, instance) -> str:
        return instance.fingerprint

    def mode_of(self, instance) -> str:
        return instance.mode.name

    def evaluate(self, instance) -> Verdict:
        w = tuple(self.witnesses(instance))
        status = PASS if self.decide(w) else FAIL
        return Verdict(self.id, status, w, self.fingerprint(instance), self.mode_of(instance))

    def check(self, instance, context: Optional[str] = None) -> Verdict:
        context = context or self.mode_of(instance)
        if context not in self.applicable:
            return Verdict(self.id, NA, (), self.fingerprint(instance), self.mode_of(instance))
        return self.evaluate(instance)

    @classmethod
    def all_statements(cls) -> List["Statement"]:
        subclasses = cls.__subclasses__()
        for subclass in list(subclasses):
            subclasses.extend(subclass.__subclasses__())
        return [s() for s in subclasses if s.id]

    @classmethod
    def by_id(cls) -> Dict[str, "Statement"]:
        return {s.id: s for s in cls.all_statements()}

    @classmethod
    def for_flavor(cls, flavor: str) -> List["Statement"]:
        pair_flavor = flavor == "pairs"
        return [s for s in cls.all_statements() if isinstance(s, PairStatement) == pair_flavor]


TANGENT_CONTEXTS = frozenset({"isogonal", "isotomic", "conic"})


def _vertex_concurrency(cfg: Configuration, points: Sequence[ProjPoint]) -> int:
    lines = [join(v, p) for v, p in zip(cfg.triangle.vertices, points)]
    return bracket(*lines)


class Theorem1(Statement):
    """AX, BY, CZ concur at R, and AX', BY', CZ' at R'."""

    id = "theorem1"
    applicable = TANGENT_CONTEXTS

    def witnesses(self, cfg):
        return [
            ("R", _vertex_concurrency(cfg, (cfg.x, cfg.y, cfg.z))),
            ("R'", _vertex_concurrency(cfg, (cfg.x_prime, cfg.y_prime, cfg.z_prime))),
        ]


class TangentConic(Statement):
    """The six cevian lines touch one conic: fit five, test the sixth, for every holdout."""

    id = "tangent_conic"
    applicable = TANGENT_CONTEXTS
    names = ("l_A", "l'_A", "l_B", "l'_B", "l_C", "l'_C")

    def witnesses(self, cfg):
        lines = cfg.lines
        if len(set(lines)) < len(lines):
            # at most five distinct tangency conditions, which some conic always meets
            return [("repeated lines", 0)]
        result = []
        for i, held_out in enumerate(lines):
            conic = conic_tangent_to_lines(*(l for j, l in enumerate(lines) if j != i))
            result.append((f"holdout {self.names[i]}", conic.value(held_out)))
        return result


class Theorem2(Statement):
    """Perpendicular feet of the hexagon: AH_A, BH_B, CH_C concur, primes too, and the six feet are conconic."""

    id = "theorem2"
    applicable = frozenset({"isogonal"})

    def witnesses(self, cfg):
        if cfg.feet is None:
            raise HexagonPointAtInfinity("configuration has a hexagon point at infinity")
        f = cfg.feet
        return [
            ("feet", _vertex_concurrency(cfg, (f.h_a, f.h_b, f.h_c))),
            ("feet'", _vertex_concurrency(cfg, (f.h_a_prime, f.h_b_prime, f.h_c_prime))),
            ("feet conconic", conconic_det(*f)),
        ]


def _line(p: ProjPoint, q: ProjPoint) -> Optional[ProjLine]:
    """Line through p and q; None once the pair has collapsed to one point."""
    return None if proj_equal(p, q) else join(p, q)


def _concurrency(*items) -> int:
    """bracket of three lines (or points); a vacuous member makes it hold."""
    if any(item is None for item in items):
        return 0
    return bracket(*items)


def _incidence(line: Optional[ProjLine], p: Optional[ProjPoint]) -> int:
    if line is None or p is None:
        return 0
    return line.residual(p)


class Theorem3(Statement):
    """Lemma concurrences, the perspectrix of XYZ and X'Y'Z', XX' YY' ZZ' concurrent, Q on RR'."""

    id = "theorem3"
    applicable = TANGENT_CONTEXTS

    def witnesses(self, cfg):
        x, y, z, xp, yp, zp = cfg.hexagon
        tri = cfg.triangle
        return [
            ("XY X'Y' AB", _concurrency(_line(x, y), _line(xp, yp), tri.side_c)),
            ("YZ Y'Z' BC", _concurrency(_line(y, z), _line(yp, zp), tri.side_a)),
            ("ZX Z'X' CA", _concurrency(_line(z, x), _line(zp, xp), tri.side_b)),
            ("perspectrix", _concurrency(*perspective_points(cfg, strict=False))),
            ("XX' YY' ZZ'", _concurrency(_line(x, xp), _line(y, yp), _line(z, zp))),
            ("Q on RR'", _incidence(_line(cfg.r, cfg.r_prime), cfg.q)),
        ]


def _trace_bary(cfg: Configuration):
    t, tp = cfg.traces, cfg.traces_prime
    return (t.a, tp.a, t.b, tp.b, t.c, tp.c)


class Theorem4(Statement):
    """The six traces are conconic, by determinant and by the ratio product."""

    id = "theorem4"
    applicable = TANGENT_CONTEXTS

    def witnesses(self, cfg):
        return [
            ("conconic", conconic_det(*cfg.trace_points)),
            ("carnot - 1", as_witness(carnot_product(cfg.triangle, _trace_bary(cfg)) - 1)),
        ]


class Biconditional(Statement):
    """Traces conconic iff the six lines are tangent to one conic; holds when both sides agree."""

    id = "biconditional"
    applicable = frozenset({"conic", "free"})

    def witnesses(self, cfg):
        lines = cfg.lines
        conic = conic_tangent_to_lines(*lines[:5])
        return [
            ("forward", conconic_det(*cfg.trace_points)),
            ("reverse", conic.value(lines[5])),
        ]

    def decide(self, witnesses):
        forward, reverse = (v for _, v in witnesses)
        return (forward == 0) == (reverse == 0)

    def flipped(self, witnesses):
        return all(v != 0 for _, v in witnesses)


class Corollary1(Statement):
    """A2, B2, C2 lie on XX', YY', ZZ', and those three lines concur."""

    id = "corollary1"
    applicable = TANGENT_CONTEXTS

    def witnesses(self, cfg):
        x, y, z, xp, yp, zp = cfg.hexagon
        pappus = [_line(x, xp), _line(y, yp), _line(z, zp)]
        a2, b2, c2 = pappus_points(cfg, strict=False)
        return [
            ("A2 on XX'", _incidence(pappus[0], a2)),
            ("B2 on YY'", _incidence(pappus[1], b2)),
            ("C2 on ZZ'", _incidence(pappus[2], c2)),
            ("Pappus lines", _concurrency(*pappus)),
        ]


class Corollary2(Statement):
    id = "corollary2"
    applicable = TANGENT_CONTEXTS

    def witnesses(self, cfg):
        return [("AA3 BB3 CC3", _vertex_concurrency(cfg, pascal_points(cfg, strict=True)))]


class Conjugate(Statement):
    """R' is the isogonal (isotomic) conjugate of R."""

    id = "conjugate"
    applicable = frozenset({"isogonal", "isotomic"})
    controlled = False

    def witnesses(self, cfg):
        tri = cfg.triangle
        r = proj_to_bary(tri, cfg.r)
        if cfg.mode.kind is ModeKind.ISOTOMIC:
            conj = isotomic_conjugate(r)
        else:
            conj = isogonal_conjugate(tri, r)
        rp = proj_to_bary(tri, cfg.r_prime)
        return list(zip(("x", "y", "z"), cross(conj.coords, rp.coords)))


class PairStatement(Statement):
    """Statements over a pair of triangles rather than a Configuration."""

    controlled = False

    def fingerprint(self, pair):
        tri1, tri2 = pair
        return get_id_for_object([[p.to_list() for p in tri1], [p.to_list() for p in tri2]])[:16]

    def mode_of(self, pair):
        return "none"


class PerspectiveIffConconic(PairStatement):
    """Two triangles are perspective iff the six cross points of their sidelines are conconic."""

    id = "perspective"
    applicable = frozenset({"none"})

    def witnesses(self, pair):
        tri1, tri2 = pair
        return [
            ("perspector", bracket(*(join(p, q) for p, q in zip(tri1, tri2)))),
            ("conconic", conconic_det(*cross_points(tri1, tri2))),
        ]

    def decide(self, witnesses):
        perspective, conconic = (v for _, v in witnesses)
        return (perspective == 0) == (conconic == 0)


def check_theorem1(cfg: Configuration) -> Verdict:
    return Theorem1().check(cfg, context_of(cfg))


def check_tangent_conic(cfg: Configuration) -> Verdict:
    return TangentConic().check(cfg, context_of(cfg))


def check_theorem2(cfg: Configuration) -> Verdict:
    return Theorem2().check(cfg, context_of(cfg))


def check_theorem3(cfg: Configuration) -> Verdict:
    return Theorem3().check(cfg, context_of(cfg))


def check_theorem4(cfg: Configuration) -> Verdict:
    return Theorem4().check(cfg, context_of(cfg))


def check_biconditional(cfg: Configuration) -> Verdict:
    return Biconditional().evaluate(cfg)


def check_corollary1(cfg: Configuration) -> Verdict:
    return Corollary1().check(cfg, context_of(cfg))


def check_corollary2(cfg: Configuration) -> Verdict:
    return Corollary2().check(cfg, context_of(cfg))


def check_conjugate(cfg: Configuration) -> Verdict:
    return Conjugate().check(cfg, context_of(cfg))


def check_perspective_iff_conconic(tri1: Sequence[ProjPoint], tri2: Sequence[ProjPoint]) -> Verdict:
    return PerspectiveIffConconic().evaluate((tuple(tri1), tuple(tri2)))

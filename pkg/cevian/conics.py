"""Conics as symmetric 3x3 integer matrices, and the six-point conconicity tests."""
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Tuple, Union

from .errors import DegenerateConic, DegenerateInput, NotOnSideline
from .linalg import det, integer_row, nullspace, primitive
from .projective import Homogeneous, ProjLine, ProjPoint, proj_equal
from .triangle import Bary, Triangle, proj_to_bary, side_index, signed_ratio


class SymmetricForm:
    """Symmetric matrix [[a, h, g], [h, b, f], [g, f, c]] stored up to scale.

    The quadratic form is a x^2 + b y^2 + c z^2 + 2f yz + 2g zx + 2h xy.
    """

    __slots__ = ("coefficients",)

    def __init__(self, a, b, c, f, g, h):
        ints, _ = integer_row((a, b, c, f, g, h))
        if not any(ints):
            raise DegenerateInput(f"{self.__class__.__name__} with zero matrix")
        object.__setattr__(self, "coefficients", primitive(ints))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    def __eq__(self, other):
        return type(other) is type(self) and other.coefficients == self.coefficients

    def __hash__(self):
        return hash((self.__class__.__name__, self.coefficients))

    def __repr__(self):
        return f"{self.__class__.__name__}{self.coefficients}"

    def __reduce__(self):
        return (self.__class__, self.coefficients)

    @property
    def matrix(self) -> Tuple[Tuple[int, int, int], ...]:
        a, b, c, f, g, h = self.coefficients
        return ((a, h, g), (h, b, f), (g, f, c))

    def value(self, t: Homogeneous) -> int:
        a, b, c, f, g, h = self.coefficients
        x, y, z = t.coords
        return a * x * x + b * y * y + c * z * z + 2 * (f * y * z + g * z * x + h * x * y)

    def apply(self, t: Homogeneous) -> Tuple[int, int, int]:
        return tuple(sum(m_ij * t_j for m_ij, t_j in zip(row, t.coords)) for row in self.matrix)

    @property
    def determinant(self) -> int:
        a, b, c, f, g, h = self.coefficients
        return a * (b * c - f * f) - h * (h * c - f * g) + g * (h * f - b * g)

    @property
    def is_degenerate(self) -> bool:
        return self.determinant == 0

    def adjugate(self) -> Tuple[int, ...]:
        a, b, c, f, g, h = self.coefficients
        return (b * c - f * f, a * c - g * g, a * b - h * h, g * h - a * f, h * f - b * g, f * g - h * c)


class Conic(SymmetricForm):
    """Point conic: p lies on it iff p^T M p = 0."""

    __slots__ = ()


class DualConic(SymmetricForm):
    """Line conic: l is tangent iff l^T M* l = 0."""

    __slots__ = ()

    def tangency_point(self, l: ProjLine) -> ProjPoint:
        """Point of contact of a tangent line (the pole of l under M*)."""
        return ProjPoint(self.apply(l))


def dual_conic(form: SymmetricForm) -> SymmetricForm:
    """Adjugate transfer: Conic -> DualConic, DualConic -> Conic."""
    if form.is_degenerate:
        raise DegenerateConic(f"{form!r} has zero determinant")
    target = DualConic if isinstance(form, Conic) else Conic
    return target(*form.adjugate())


def veronese(t: Homogeneous) -> Tuple[int, ...]:
    x, y, z = t.coords
    return (x * x, y * y, z * z, x * y, x * z, y * z)


def _fit(items: Sequence[Homogeneous], target):
    for s, t in combinations(items, 2):
        if proj_equal(s, t):
            raise DegenerateInput(f"repeated element {s!r}")
    basis = nullspace([veronese(t) for t in items])
    if len(basis) != 1:
        raise DegenerateInput(f"{len(items)} elements determine a {len(basis)}-dimensional family of conics")
    n0, n1, n2, n3, n4, n5 = basis[0]
    return target(2 * n0, 2 * n1, 2 * n2, n5, n4, n3)


def conic_through_points(*points: ProjPoint) -> Conic:
    if len(points) != 5:
        raise DegenerateInput(f"need 5 points, got {len(points)}")
    return _fit(points, Conic)


def conic_tangent_to_lines(*lines: ProjLine) -> DualConic:
    if len(lines) != 5:
        raise DegenerateInput(f"need 5 lines, got {len(lines)}")
    return _fit(lines, DualConic)


def is_tangent(l: ProjLine, d: DualConic) -> bool:
    return d.value(l) == 0


def on_conic(p: ProjPoint, c: Conic) -> bool:
    return c.value(p) == 0


def conconic_det(*points: Homogeneous) -> int:
    if len(points) != 6:
        raise DegenerateInput(f"need 6 points, got {len(points)}")
    return det([veronese(p) for p in points])


def conconic6(*points: Homogeneous) -> bool:
    return conconic_det(*points) == 0


def carnot_product(tri: Triangle, traces: Sequence[Union[Bary, ProjPoint]]) -> Fraction:
    """Signed ratio product over the traces (A1, A1', B1, B1', C1, C1').

    Equal to 1 exactly when the six side points are conconic.
    """
    if len(traces) != 6:
        raise DegenerateInput(f"need 6 traces, got {len(traces)}")
    product = Fraction(1)
    for position, t in enumerate(traces):
        if isinstance(t, ProjPoint):
            t = proj_to_bary(tri, t)
        if side_index(t) != position // 2:
            raise NotOnSideline(f"trace {position} ({t!r}) is not on its assigned sideline")
        product *= signed_ratio(t)
    return product

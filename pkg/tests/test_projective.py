from fractions import Fraction

import pytest

from cevian.errors import CoincidentLines, CoincidentPoints, DegenerateInput, PointAtInfinity
from cevian.linalg import as_fraction, det, nullspace
from cevian.projective import (
    LINE_AT_INFINITY,
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    join,
    meet,
    proj_equal,
    span,
)


def test_canonical_form():
    p = ProjPoint(2, 4, -2)
    assert p.coords == (1, 2, -1)
    assert p == ProjPoint(-1, -2, 1)
    assert hash(p) == hash(ProjPoint(-1, -2, 1))
    assert ProjPoint(Fraction(1, 2), Fraction(1, 3), 1).coords == (3, 2, 6)


def test_points_and_lines_are_distinct_types():
    assert ProjPoint(1, 0, 0) != ProjLine(1, 0, 0)


def test_zero_triple_rejected():
    with pytest.raises(DegenerateInput):
        ProjPoint(0, 0, 0)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_join_and_meet():
    assert join(ProjPoint.from_cartesian(0, 0), ProjPoint.from_cartesian(1, 0)) == ProjLine(0, 1, 0)
    assert meet(ProjLine(1, 0, 0), ProjLine(0, 1, 0)) == ProjPoint(0, 0, 1)


def test_parallel_lines_meet_at_infinity():
    p = meet(ProjLine(1, 0, 0), ProjLine(1, 0, -1))
    assert p == ProjPoint(0, 1, 0)
    assert not p.is_finite
    assert LINE_AT_INFINITY.contains(p)
    with pytest.raises(PointAtInfinity):
        p.cartesian()


def test_coincident_inputs():
    p = ProjPoint.from_cartesian(1, 2)
    with pytest.raises(CoincidentPoints):
        join(p, ProjPoint(2, 4, 2))
    with pytest.raises(CoincidentLines):
        meet(ProjLine(1, 1, 1), ProjLine(-2, -2, -2))


def test_incidence_predicates():
    a, b = ProjPoint.from_cartesian(0, 0), ProjPoint.from_cartesian(1, 1)
    assert collinear(a, b, ProjPoint.from_cartesian(Fraction(5, 3), Fraction(5, 3)))
    assert not collinear(a, b, ProjPoint.from_cartesian(1, 2))
    assert concurrent(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0))
    assert proj_equal(ProjPoint(1, 2, 3), ProjPoint(2, 4, 6))


def test_span():
    p = span(ProjPoint.from_cartesian(0, 0), ProjPoint.from_cartesian(2, 2), 1, 1)
    assert p == ProjPoint.from_cartesian(1, 1)


def test_cartesian_round_trip():
    p = ProjPoint.from_cartesian(Fraction(-3, 4), 5)
    assert p.cartesian() == (Fraction(-3, 4), Fraction(5))


def test_det():
    assert det([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[Fraction(1, 2), 0], [0, 4]]) == 2


def test_nullspace():
    assert nullspace([[1, 1, 0], [0, 1, 1]]) == [(1, -1, 1)]
    assert len(nullspace([[1, 0, 0]])) == 2
    assert nullspace([[1, 0], [0, 1]]) == []


def test_nullspace_pivot_in_last_column():
    # free column ahead of a pivot in the last column
    assert nullspace([[0, 1]]) == [(1, 0)]
    assert nullspace([[1, 2, 0], [0, 0, 3]]) == [(2, -1, 0)]
    assert all(isinstance(v, int) for v in nullspace([[0, 0, 1], [0, 1, 1]])[0])


def test_join_of_unit_points():
    line = join(ProjPoint(1, 0, 1), ProjPoint(0, 1, 1))
    assert line == ProjLine(1, 1, -1)
    assert line.contains(ProjPoint(1, 0, 1)) and line.contains(ProjPoint(0, 1, 1))


def test_meet_of_joins_through_a_common_point():
    p, q, r = ProjPoint(1, 2, 1), ProjPoint(3, -1, 1), ProjPoint(0, 5, 2)
    assert meet(join(p, q), join(p, r)) == p
    assert proj_equal(ProjPoint(0, 0, 1), ProjPoint(0, 0, -5))
    assert not proj_equal(ProjPoint(1, 2, 3), ProjPoint(1, 2, 4))

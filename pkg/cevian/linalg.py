"""Exact linear algebra over the rationals.

The 3x3 work (cross products, determinants of point triples) is written out
inline; the 6-column conic systems go through sympy's DomainMatrix over QQ.
"""
import math
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Rational = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r} in exact arithmetic")
    return Fraction(value)


def integer_row(row: Sequence[Rational]) -> Tuple[Tuple[int, ...], int]:
    """Scale a rational row to integers; returns (ints, scale) with ints = scale * row."""
    fracs = [as_fraction(v) for v in row]
    scale = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    return tuple(int(f * scale) for f in fracs), scale


def primitive(vector: Sequence[int]) -> Tuple[int, ...]:
    """Divide by the gcd and make the first nonzero entry positive."""
    g = math.gcd(*vector)
    if g == 0:
        return tuple(vector)
    vector = [v // g for v in vector]
    for v in vector:
        if v != 0:
            if v < 0:
                vector = [-w for w in vector]
            break
    return tuple(vector)


def det3(m: Sequence[Sequence[Rational]]) -> Rational:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cross(p: Sequence[Rational], q: Sequence[Rational]) -> Tuple[Rational, ...]:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def to_domain(matrix: Sequence[Sequence[Rational]]) -> DomainMatrix:
    rows = []
    for row in matrix:
        rows.append([QQ(f.numerator, f.denominator) for f in map(as_fraction, row)])
    return DomainMatrix(rows, (len(rows), len(rows[0]) if rows else 0), QQ)


def from_domain(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def det(matrix: Sequence[Sequence[Rational]]) -> Rational:
    n = len(matrix)
    if n == 0:
        return 1
    if n == 3:
        return det3(matrix)
    value = from_domain(to_domain(matrix).det())
    return value.numerator if value.denominator == 1 else value


def nullspace(matrix: Sequence[Sequence[Rational]]) -> List[Tuple[int, ...]]:
    """Integer basis of the right nullspace, one primitive vector per row."""
    basis = to_domain(matrix).nullspace().to_Matrix().tolist()
    return [primitive(integer_row([Fraction(int(e.p), int(e.q)) for e in row])[0]) for row in basis]

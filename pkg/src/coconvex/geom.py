"""Exact rational scalars, vectors, hyperplanes and linear-algebra predicates.

Scalars are :class:`fractions.Fraction` (always reduced, positive denominator)
and vectors are plain tuples of them.  Nothing in here touches floating point.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyInput, GeometryError

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def parse_scalar(text: str) -> Fraction:
    text = text.strip()
    if not _SCALAR_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vector(coords: Iterable) -> Vector:
    return tuple(scalar(c) for c in coords)


def _check_dims(*vs: Sequence) -> int:
    n = len(vs[0])
    for v in vs[1:]:
        if len(v) != n:
            raise DimensionMismatch(f"dimension {len(v)} != {n}")
    return n


def add(u: Vector, v: Vector) -> Vector:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def mul(t, v: Vector) -> Vector:
    return tuple(t * a for a in v)


def dot(u: Sequence, v: Sequence):
    _check_dims(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: Sequence) -> bool:
    return all(c == 0 for c in v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of `v` with coprime integer entries."""
    v = [scalar(c) for c in v]
    if is_zero(v):
        raise GeometryError("zero vector has no primitive direction")
    den = math.lcm(*(c.denominator for c in v))
    ints = [int(c * den) for c in v]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on a square integer matrix."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]) // prev
        prev = piv
    return sign * m[n - 1][n - 1]


def determinant(columns: Sequence[Vector]) -> Fraction:
    """Exact determinant of the matrix whose columns are given."""
    n = len(columns)
    for c in columns:
        if len(c) != n:
            raise DimensionMismatch(f"need {n} vectors of dimension {n}")
    scale = Fraction(1)
    ints = []
    for c in columns:
        c = [scalar(x) for x in c]
        den = math.lcm(*(x.denominator for x in c)) if c else 1
        scale /= den
        ints.append([int(x * den) for x in c])
    # det(M) = det(M^T); rows of the transpose are the columns
    return bareiss_det(ints) * scale


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                m[r] = [x * p[col] - f * y for x, y in zip(m[r], p)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(rows: Sequence[Vector]) -> int:
    return integer_rank([primitive(r) if not is_zero(r) else tuple(0 for _ in r) for r in rows])


def affine_dimension(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull of a nonempty point list."""
    if not points:
        raise EmptyInput("affine_dimension of no points")
    _check_dims(*points)
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


class Side(enum.Enum):
    NEGATIVE = -1
    ON = 0
    POSITIVE = 1


@dataclass(frozen=True)
class Hyperplane:
    """The set {x : normal . x = offset}; the closed side normal . x <= offset is H+."""

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", vector(self.normal))
        object.__setattr__(self, "offset", scalar(self.offset))
        if is_zero(self.normal):
            raise GeometryError("hyperplane normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, p: Vector) -> Fraction:
        return dot(self.normal, p) - self.offset

    def negated(self) -> "Hyperplane":
        return Hyperplane(tuple(-c for c in self.normal), -self.offset)


def side_of(h: Hyperplane, p: Vector) -> Side:
    v = h.value(p)
    return Side.POSITIVE if v > 0 else Side.NEGATIVE if v < 0 else Side.ON


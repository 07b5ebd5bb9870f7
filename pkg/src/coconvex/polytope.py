"""Bounded convex polytopes in vertex representation."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from . import _hull
from .errors import DimensionMismatch, EmptyInput, NonpositiveScale
from .geom import Hyperplane, Vector, add, dot, format_scalar, mul, scalar, vector


@dataclass(frozen=True)
class Polytope:
    """Convex hull of `vertices`, which are minimal and lexicographically sorted.

    Build instances with :func:`convex_hull`; the constructor trusts its input.
    """

    dim: int
    vertices: tuple

    @cached_property
    def affine_dim(self) -> int:
        pts, _ = _hull.clear_denominators(list(self.vertices))
        return _hull.affine_frame(pts)[0]

    @property
    def is_full(self) -> bool:
        return self.affine_dim == self.dim

    @cached_property
    def facets(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Outward H-representation ``a . x <= b`` (full-dimensional only)."""
        if not self.is_full:
            raise ValueError("H-representation needs a full-dimensional polytope")
        pts, den = _hull.clear_denominators(list(self.vertices))
        return [(f.normal, f.offset / den) for f in _hull.full_hull(pts).facets]

    def contains(self, p: Vector) -> bool:
        if self.is_full:
            return all(dot(a, p) <= b for a, b in self.facets)
        return convex_hull(list(self.vertices) + [vector(p)]) == self

    def support(self, direction: Sequence) -> Fraction:
        return max(dot(direction, v) for v in self.vertices)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [[format_scalar(c) for c in v] for v in self.vertices],
        }


def convex_hull(points: Sequence) -> Polytope:
    """Minimal canonical vertex set of the hull of `points`."""
    if not points:
        raise EmptyInput("convex hull of no points")
    pts = [vector(p) for p in points]
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    idx, _ = _hull.hull_vertices(pts)
    return Polytope(n, tuple(sorted({pts[i] for i in idx})))


def volume(P: Polytope) -> Fraction:
    """Exact n-dimensional volume; zero for lower-dimensional polytopes."""
    if not P.is_full:
        return Fraction(0)
    pts, den = _hull.clear_denominators(list(P.vertices))
    return Fraction(_hull.normalized_volume(pts), math.factorial(P.dim) * den**P.dim)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.dim != Q.dim:
        raise DimensionMismatch(f"dimensions {P.dim} and {Q.dim}")
    return convex_hull([add(p, q) for p in P.vertices for q in Q.vertices])


def scale(P: Polytope, t) -> Polytope:
    t = scalar(t)
    if t <= 0:
        raise NonpositiveScale(f"scale factor must be positive, got {t}")
    # positive scaling preserves minimality and lexicographic order
    return Polytope(P.dim, tuple(mul(t, v) for v in P.vertices))


def translate(P: Polytope, u: Vector) -> Polytope:
    u = vector(u)
    return Polytope(P.dim, tuple(add(v, u) for v in P.vertices))


def clip(P: Polytope, h: Hyperplane) -> Optional[Polytope]:
    """``P`` intersected with ``normal . x <= offset``; None when empty."""
    if h.dim != P.dim:
        raise DimensionMismatch("hyperplane and polytope dimensions differ")
    vals = [h.value(v) for v in P.vertices]
    keep = [v for v, s in zip(P.vertices, vals) if s <= 0]
    if len(keep) == len(vals):
        return P
    if not keep:
        return None
    # crossing points of every (inside, outside) vertex pair; edges are among them
    cuts = []
    for v, sv in zip(P.vertices, vals):
        if sv >= 0:
            continue
        for w, sw in zip(P.vertices, vals):
            if sw > 0:
                t = sv / (sv - sw)
                cuts.append(tuple(a + t * (b - a) for a, b in zip(v, w)))
    return convex_hull(keep + cuts)


def project_point(p: Vector, h: Hyperplane) -> Vector:
    n = h.normal
    t = h.value(p) / dot(n, n)
    return tuple(a - t * b for a, b in zip(p, n))


def project_onto(P: Polytope, h: Hyperplane) -> Polytope:
    """Orthogonal projection onto `h`, kept in the ambient space."""
    if h.dim != P.dim:
        raise DimensionMismatch("hyperplane and polytope dimensions differ")
    return convex_hull([project_point(v, h) for v in P.vertices])


def segment(a: Vector, b: Vector) -> Polytope:
    return convex_hull([a, b])

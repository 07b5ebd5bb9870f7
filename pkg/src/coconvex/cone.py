"""Pointed full-dimensional polyhedral cones given by generator rays."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _hull
from .errors import (
    ContainsLine,
    DimensionMismatch,
    EmptyInput,
    GeometryError,
    InteriorCertificateFailed,
    NonpositiveOffset,
    NotFullDimensional,
    SectionNotCompact,
)
from .geom import Hyperplane, Vector, dot, format_scalar, integer_rank, is_zero, primitive, vector
from .polytope import Polytope, convex_hull


@dataclass(frozen=True)
class PolyhedralCone:
    """Cone spanned by irredundant primitive integer `generators`.

    `facet_normals` are the inward primitive normals ``a`` with ``a . x >= 0``
    on the cone; they are derived once at validation time.
    """

    dim: int
    generators: tuple
    facet_normals: tuple = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"generators": [[format_scalar(Fraction(c)) for c in g] for g in self.generators]}


def _cone_facets(rays: list[tuple[int, ...]], n: int):
    """Inward facet normals of cone(rays), or ContainsLine.

    Facets of conv(0, rays) through the origin are the facets of the cone,
    provided the origin is a vertex, which happens exactly when the cone is
    pointed.
    """
    origin = tuple(0 for _ in range(n))
    hull = _hull.full_hull([origin] + rays)
    if 0 not in hull.vertices:
        raise ContainsLine("cone contains a line")
    return [tuple(-c for c in f.normal) for f in hull.facets if f.offset == 0]


def _extreme(rays, normals, n):
    out = []
    for r in rays:
        tight = [a for a in normals if sum(x * y for x, y in zip(a, r)) == 0]
        if integer_rank(tight) == n - 1:
            out.append(r)
    return out


def validate(generators: Sequence) -> PolyhedralCone:
    """Validated cone: primitive rays, redundant ones dropped, canonical order."""
    if not generators:
        raise EmptyInput("cone needs at least one generator")
    gens = [vector(g) for g in generators]
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise DimensionMismatch("generators of mixed dimension")
    if any(is_zero(g) for g in gens):
        raise GeometryError("zero generator")
    rays = sorted({primitive(g) for g in gens})
    if integer_rank(rays) < n:
        raise NotFullDimensional("generators do not span the space")
    normals = _cone_facets(rays, n)
    rays = _extreme(rays, normals, n)
    return PolyhedralCone(n, tuple(rays), tuple(sorted(set(normals))))


def contains(C: PolyhedralCone, p: Vector) -> bool:
    if len(p) != C.dim:
        raise DimensionMismatch("point and cone dimensions differ")
    return all(dot(a, p) >= 0 for a in C.facet_normals)


def in_dual_interior(C: PolyhedralCone, u: Sequence) -> bool:
    """True iff u is strictly positive on every generator (compact sections)."""
    if len(u) != C.dim:
        raise DimensionMismatch("vector and cone dimensions differ")
    return all(dot(u, g) > 0 for g in C.generators)


def _in_interior(C: PolyhedralCone, u) -> bool:
    return all(dot(a, u) > 0 for a in C.facet_normals)


def interior_direction(C: PolyhedralCone) -> tuple[int, ...]:
    """Primitive direction certified to lie in int C and in int C*.

    Tries the sum of generators, then the sum of facet normals.
    """
    candidates = [
        [sum(g[i] for g in C.generators) for i in range(C.dim)],
        [sum(a[i] for a in C.facet_normals) for i in range(C.dim)],
    ]
    for u in candidates:
        if any(u) and _in_interior(C, u) and in_dual_interior(C, u):
            return primitive(u)
    raise InteriorCertificateFailed(
        "neither the generator sum nor the facet-normal sum is interior to both C and C*"
    )


def ray_hit(p: Vector, g: Sequence, h: Hyperplane) -> Vector:
    """The point where the ray p + t g (t >= 0) meets h; requires normal . g > 0."""
    t = (h.offset - dot(h.normal, p)) / dot(h.normal, g)
    return tuple(a + t * b for a, b in zip(p, g))


def truncate(C: PolyhedralCone, h: Hyperplane) -> Polytope:
    """The polytope C intersected with ``normal . x <= offset``."""
    if h.dim != C.dim:
        raise DimensionMismatch("hyperplane and cone dimensions differ")
    if not in_dual_interior(C, h.normal):
        raise SectionNotCompact("hyperplane normal is not in the interior of the dual cone")
    if h.offset <= 0:
        raise NonpositiveOffset("truncating hyperplane must have positive offset")
    origin = tuple(Fraction(0) for _ in range(C.dim))
    return convex_hull([origin] + [ray_hit(origin, g, h) for g in C.generators])

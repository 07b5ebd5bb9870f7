"""C-coconvex bodies, the coconvex sum, homotheties and the cap construction.

A body K is stored only through its convex complement A = conv(apexes) + C,
with K = closure(C \\ A).  The boundary of K shared with A is therefore part of
K; volumes and equality tests do not see the difference.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from . import _hull
from . import cone as cones
from . import polytope as poly
from .errors import (
    ApexOutsideCone,
    BodyEmpty,
    ComplementNotBounded,
    ConeMismatch,
    DimensionMismatch,
    EmptyInput,
    HyperplaneTooLow,
    LambdaOutOfRange,
    NonpositiveScale,
    SectionNotCompact,
)
from .geom import Hyperplane, Vector, dot, format_scalar, mul, scalar, vector
from .polytope import Polytope


@dataclass(frozen=True)
class CFullSet:
    """A = conv(apexes) + C with a minimal, lexicographically sorted apex list.

    `facets` holds the inner description ``c . x >= offset`` (primitive c).
    """

    cone: cones.PolyhedralCone
    apexes: tuple
    facets: tuple = field(compare=False, repr=False)

    def contains(self, x: Vector) -> bool:
        return all(dot(c, x) >= g for c, g in self.facets)


@dataclass(frozen=True)
class CoconvexBody:
    cone: cones.PolyhedralCone
    complement: CFullSet

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def apexes(self) -> tuple:
        return self.complement.apexes

    @cached_property
    def volume(self) -> Fraction:
        return volume(self)

    def contains(self, x: Vector) -> bool:
        """Membership in K = closure(C minus A)."""
        x = vector(x)
        if not cones.contains(self.cone, x):
            return False
        return any(dot(c, x) <= g for c, g in self.complement.facets if g > 0)

    def to_json(self) -> dict:
        return {
            "cone": self.cone.to_json(),
            "apexes": [[format_scalar(c) for c in p] for p in self.apexes],
        }


def _complement_structure(C: cones.PolyhedralCone, pts: list):
    """Minimal apexes and inner facets of conv(pts) + C.

    Works on the homogenised cone spanned by (p, 1) and (g, 0): its facets
    with a nonzero spatial part cut out A, and its extreme rays with last
    coordinate 1 are the vertices of A.
    """
    n = C.dim
    origin = tuple(Fraction(0) for _ in range(n + 1))
    lifted = [p + (Fraction(1),) for p in pts]
    lifted += [tuple(Fraction(c) for c in g) + (Fraction(0),) for g in C.generators]
    ints, _ = _hull.clear_denominators([origin] + lifted)
    hull = _hull.full_hull(ints)
    inward = [tuple(-c for c in f.normal) for f in hull.facets if f.offset == 0]

    apexes = []
    for i, p in enumerate(pts):
        r = ints[i + 1]
        tight = [a for a in inward if sum(x * y for x, y in zip(a, r)) == 0]
        if _hull.integer_rank(tight) == n:
            apexes.append(p)

    facets = set()
    for a in inward:
        spatial, last = a[:n], a[n]
        if not any(spatial):
            continue
        g = math.gcd(*spatial)
        facets.add((tuple(c // g for c in spatial), Fraction(-last, g)))
    return tuple(sorted(set(apexes))), tuple(sorted(facets))


def make_coconvex(C: cones.PolyhedralCone, apexes: Sequence) -> CoconvexBody:
    """Validated body whose complement in C is conv(apexes) + C."""
    if not apexes:
        raise EmptyInput("a coconvex body needs at least one apex")
    pts = sorted({vector(p) for p in apexes})
    for p in pts:
        if len(p) != C.dim:
            raise DimensionMismatch(f"apex {p} has dimension {len(p)}, cone has {C.dim}")
        if not cones.contains(C, p):
            raise ApexOutsideCone(f"apex {tuple(map(format_scalar, p))} is outside the cone")
    minimal, facets = _complement_structure(C, pts)
    cutting = [(c, g) for c, g in facets if g > 0]
    if not cutting:
        raise BodyEmpty("complement is the whole cone")
    for c, g in cutting:
        # C ∩ {c.x < g} is bounded iff c is strictly positive on C \ {0}
        if not cones.in_dual_interior(C, c):
            raise ComplementNotBounded(
                f"facet {c}.x >= {format_scalar(g)} of the complement leaves an unbounded region"
            )
    # a cutting facet with positive offset already carves out a neighbourhood
    # of the apex of C, so the body has positive volume here
    return CoconvexBody(C, CFullSet(C, minimal, facets))


def _same_cone(*bodies: CoconvexBody) -> cones.PolyhedralCone:
    C = bodies[0].cone
    for K in bodies[1:]:
        if K.cone != C:
            raise ConeMismatch("bodies live in different cones")
    return C


def choose_hyperplane(C: cones.PolyhedralCone, bodies: Sequence[CoconvexBody]) -> Hyperplane:
    """Truncating hyperplane with every body strictly on the origin side."""
    for K in bodies:
        if K.cone != C:
            raise ConeMismatch("body not on the given cone")
    u = cones.interior_direction(C)
    top = max(dot(u, p) for K in bodies for p in K.apexes)
    return Hyperplane(u, 2 * top)


def build_cap(K: CoconvexBody, h: Hyperplane) -> Polytope:
    """cap_H(K): the complement A intersected with ``normal . x <= offset``."""
    C = K.cone
    if h.dim != C.dim:
        raise DimensionMismatch("hyperplane and body dimensions differ")
    if not cones.in_dual_interior(C, h.normal):
        raise SectionNotCompact("hyperplane section of the cone is not compact")
    for p in K.apexes:
        if dot(h.normal, p) >= h.offset:
            raise HyperplaneTooLow(f"apex {tuple(map(format_scalar, p))} is not below the hyperplane")
    pts = list(K.apexes)
    pts += [cones.ray_hit(p, g, h) for p in K.apexes for g in C.generators]
    return poly.convex_hull(pts)


def volume(K: CoconvexBody, h: Optional[Hyperplane] = None) -> Fraction:
    """V(K) = V(C ∩ H+) - V(cap_H(K)); any admissible h gives the same value."""
    if h is None:
        h = choose_hyperplane(K.cone, [K])
    return poly.volume(cones.truncate(K.cone, h)) - poly.volume(build_cap(K, h))


def oplus(K1: CoconvexBody, K2: CoconvexBody) -> CoconvexBody:
    """K1 ⊕ K2 = C minus ((C minus K1) + (C minus K2)); uses C + C = C."""
    C = _same_cone(K1, K2)
    return make_coconvex(C, [tuple(a + b for a, b in zip(p, q)) for p in K1.apexes for q in K2.apexes])


def scale(K: CoconvexBody, t) -> CoconvexBody:
    t = scalar(t)
    if t <= 0:
        raise NonpositiveScale(f"scale factor must be positive, got {t}")
    A = K.complement
    facets = tuple(sorted((c, g * t) for c, g in A.facets))
    return CoconvexBody(K.cone, CFullSet(K.cone, tuple(mul(t, p) for p in A.apexes), facets))


def combine(lam, K1: CoconvexBody, K2: CoconvexBody) -> CoconvexBody:
    """(1 - lam) K1 ⊕ lam K2."""
    lam = scalar(lam)
    _same_cone(K1, K2)
    if not 0 <= lam <= 1:
        raise LambdaOutOfRange(f"lambda must lie in [0, 1], got {lam}")
    if lam == 0:
        return K1
    if lam == 1:
        return K2
    return oplus(scale(K1, 1 - lam), scale(K2, lam))


def detect_homothety(K1: CoconvexBody, K2: CoconvexBody) -> Optional[Fraction]:
    """The alpha > 0 with K1 = alpha K2, or None."""
    _same_cone(K1, K2)
    if len(K1.apexes) != len(K2.apexes):
        return None
    # positive scaling preserves lexicographic order, so first apexes correspond
    p, q = K1.apexes[0], K2.apexes[0]
    j = next(i for i, c in enumerate(q) if c != 0)
    alpha = p[j] / q[j]
    if alpha <= 0:
        return None
    return alpha if scale(K2, alpha).apexes == K1.apexes else None


def equals(K1: CoconvexBody, K2: CoconvexBody) -> bool:
    return K1 == K2

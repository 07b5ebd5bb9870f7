"""Exact convex hulls of integer point sets.

Everything here works on tuples of Python ints; callers clear denominators
first (positive scaling does not change hull combinatorics).  Full-dimensional
hulls use monotone chain in the plane and beneath-beyond above that.  The
result is post-filtered so that only true vertices and merged (non-simplicial)
facets survive, which keeps degenerate inputs honest.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .geom import bareiss_det, integer_rank


@dataclass
class Facet:
    normal: tuple[int, ...]  # outward, primitive
    offset: Fraction  # normal . x <= offset on the hull
    verts: tuple[int, ...]  # indices of hull vertices on the facet


@dataclass
class Hull:
    vertices: list[int]  # indices into the input, in input order
    facets: list[Facet]


def _idot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _isub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def clear_denominators(points):
    """Scale rational points to integers; returns (int points, scale)."""
    den = math.lcm(*(c.denominator for p in points for c in p)) if points and points[0] else 1
    return [tuple(int(c * den) for c in p) for p in points], den


def affine_frame(points):
    """Rank k of the affine hull and k coordinate indices on which the
    projection of the affine hull is injective."""
    base = points[0]
    rows = [list(_isub(p, base)) for p in points[1:]]
    pivots = []
    r = 0
    ncols = len(base)
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [x * p[col] - f * y for x, y in zip(rows[i], p)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return r, pivots


def _plane(pts):
    """Normal and offset of the hyperplane through k affinely independent
    points of Z^k (normal not yet oriented or reduced)."""
    base = pts[0]
    rows = [_isub(p, base) for p in pts[1:]]
    k = len(base)
    normal = []
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in rows]
        d = bareiss_det(minor)
        normal.append(-d if j % 2 else d)
    return tuple(normal), _idot(normal, base)


def _hull_1d(pts):
    lo = min(range(len(pts)), key=lambda i: pts[i][0])
    hi = max(range(len(pts)), key=lambda i: pts[i][0])
    return Hull(
        vertices=sorted({lo, hi}),
        facets=[
            Facet((-1,), Fraction(-pts[lo][0]), (lo,)),
            Facet((1,), Fraction(pts[hi][0]), (hi,)),
        ],
    )


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts):
    order = sorted(set(range(len(pts))), key=lambda i: pts[i])
    # drop duplicate points, keeping the first index
    uniq = []
    for i in order:
        if not uniq or pts[uniq[-1]] != pts[i]:
            uniq.append(i)
    lower, upper = [], []
    for i in uniq:
        while len(lower) >= 2 and _cross(pts[lower[-2]], pts[lower[-1]], pts[i]) <= 0:
            lower.pop()
        lower.append(i)
    for i in reversed(uniq):
        while len(upper) >= 2 and _cross(pts[upper[-2]], pts[upper[-1]], pts[i]) <= 0:
            upper.pop()
        upper.append(i)
    ring = lower[:-1] + upper[:-1]  # counter-clockwise
    facets = []
    for a, b in zip(ring, ring[1:] + ring[:1]):
        dx, dy = _isub(pts[b], pts[a])
        g = math.gcd(dx, dy)
        normal = (dy // g, -dx // g)
        facets.append(Facet(normal, Fraction(_idot(normal, pts[a])), (a, b)))
    return Hull(vertices=ring, facets=facets)


def _initial_simplex(pts, k):
    chosen = [0]
    rows = []
    for i in range(1, len(pts)):
        cand = rows + [_isub(pts[i], pts[0])]
        if integer_rank(cand) == len(cand):
            rows = cand
            chosen.append(i)
            if len(chosen) == k + 1:
                return chosen
    raise ValueError("points are not full-dimensional")


def _hull_nd(pts):
    k = len(pts[0])
    simplex = _initial_simplex(pts, k)
    # (k+1) * centroid of the starting simplex; strictly interior forever
    centre = tuple(sum(pts[i][j] for i in simplex) for j in range(k))
    scale = k + 1

    facets = {}
    ridges = defaultdict(set)
    next_id = 0

    def add_facet(verts):
        nonlocal next_id
        normal, off = _plane([pts[i] for i in verts])
        if _idot(normal, centre) > scale * off:
            normal, off = tuple(-c for c in normal), -off
        fid = next_id
        next_id += 1
        facets[fid] = (verts, normal, off)
        for r in combinations(verts, k - 1):
            ridges[frozenset(r)].add(fid)

    def drop_facet(fid):
        verts = facets.pop(fid)[0]
        for r in combinations(verts, k - 1):
            s = ridges[frozenset(r)]
            s.discard(fid)
            if not s:
                del ridges[frozenset(r)]

    for skip in simplex:
        add_facet(tuple(i for i in simplex if i != skip))

    in_simplex = set(simplex)
    for idx, p in enumerate(pts):
        if idx in in_simplex:
            continue
        visible = {fid for fid, (_, a, b) in facets.items() if _idot(a, p) > b}
        if not visible:
            continue
        horizon = []
        for fid in visible:
            verts = facets[fid][0]
            for r in combinations(verts, k - 1):
                key = frozenset(r)
                if any(o not in visible for o in ridges[key] if o != fid):
                    horizon.append(r)
        for fid in visible:
            drop_facet(fid)
        for r in horizon:
            add_facet(tuple(r) + (idx,))

    # merge coplanar simplicial pieces into true facets
    planes = {}
    for verts, a, b in facets.values():
        g = math.gcd(*a)
        key = (tuple(c // g for c in a), Fraction(b, g))
        planes.setdefault(key, set()).update(verts)
    candidates = sorted(set().union(*planes.values()))
    plane_list = list(planes)
    vertices = []
    for v in candidates:
        tight = [a for a, b in plane_list if _idot(a, pts[v]) == b]
        if integer_rank(tight) == k:
            vertices.append(v)
    out = [
        Facet(a, b, tuple(v for v in vertices if _idot(a, pts[v]) == b))
        for a, b in plane_list
    ]
    return Hull(vertices=vertices, facets=out)


def full_hull(pts) -> Hull:
    """Hull of integer points that affinely span their ambient space."""
    k = len(pts[0])
    if k == 1:
        return _hull_1d(pts)
    if k == 2:
        return _hull_2d(pts)
    return _hull_nd(pts)


def hull_vertices(points):
    """Indices of the extreme points among `points` (rational tuples), plus
    the dimension of their affine hull.  Duplicates keep their first index."""
    pts, _ = clear_denominators(points)
    k, pivots = affine_frame(pts)
    if k == 0:
        return [0], 0
    proj = [tuple(p[c] for c in pivots) for p in pts]
    return full_hull(proj).vertices, k


def triangulate(pts):
    """Pulling triangulation of a full-dimensional integer point set, as
    tuples of k+1 indices into `pts`."""
    k = len(pts[0])
    hull = full_hull(pts)
    if k == 1:
        return [tuple(f.verts[0] for f in hull.facets)]
    apex = hull.vertices[0]
    out = []
    for f in hull.facets:
        if apex in f.verts:
            continue
        # dropping a coordinate where the normal is nonzero is injective on the facet
        j = next(i for i, c in enumerate(f.normal) if c != 0)
        sub = [tuple(c for i, c in enumerate(pts[v]) if i != j) for v in f.verts]
        for s in triangulate(sub):
            out.append((apex,) + tuple(f.verts[i] for i in s))
    return out


def normalized_volume(pts) -> int:
    """n! times the volume of the hull of a full-dimensional integer set."""
    total = 0
    for s in triangulate(pts):
        base = pts[s[0]]
        total += abs(bareiss_det([_isub(pts[i], base) for i in s[1:]]))
    return total

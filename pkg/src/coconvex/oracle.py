"""Independent oracles and seeded instance generators.

Randomness comes from numpy's PCG64 bit generator seeded through a
SeedSequence built from ``[seed, *stream]``; this choice is pinned so that
fixtures replay identically.  Random rationals have denominators <= 64.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

import numpy as np

from . import body as bodies
from . import cone as cones
from . import polytope as poly
from .errors import DegenerateBox, GeometryError
from .geom import Hyperplane, dot, scalar
from .polytope import Polytope

MAX_DEN = 64
MAX_RETRIES = 1000
GRID_BITS = 20  # sample points are cell midpoints of a 2^20 grid per axis
CHUNK = 1 << 17


@dataclass(frozen=True)
class RandomSpec:
    dim: int = 2
    cone_rays: int = 2
    apex_count: int = 3
    coordinate_bound: Fraction = Fraction(4)
    seed: int = 0


@dataclass(frozen=True)
class VolumeEstimate:
    mean: float
    std_error: float
    samples: int


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *stream])))


def random_rational(rng: np.random.Generator, lo, hi, max_den: int = MAX_DEN) -> Fraction:
    """Uniform-ish rational in [lo, hi] with denominator <= max_den."""
    lo, hi = scalar(lo), scalar(hi)
    den = int(rng.integers(1, max_den + 1))
    a, b = math.ceil(lo * den), math.floor(hi * den)
    if a > b:
        return lo
    return Fraction(int(rng.integers(a, b + 1)), den)


def random_cone(spec: RandomSpec, rng: Optional[np.random.Generator] = None) -> cones.PolyhedralCone:
    """Pointed full-dimensional cone whose rays have last coordinate >= 1."""
    if spec.cone_rays < spec.dim:
        raise ValueError("need at least dim rays for a full-dimensional cone")
    rng = rng or make_rng(spec.seed, 0)
    bound = max(1, math.floor(spec.coordinate_bound))
    for _ in range(MAX_RETRIES):
        rays = []
        for _ in range(spec.cone_rays):
            head = [int(x) for x in rng.integers(-bound, bound + 1, size=spec.dim - 1)]
            rays.append(tuple(head) + (int(rng.integers(1, bound + 1)),))
        try:
            C = cones.validate(rays)
            cones.interior_direction(C)
        except GeometryError:
            continue
        return C
    raise RuntimeError("random_cone: retries exhausted")


def _random_in_simplexlike(rng, corners):
    """Random rational convex combination of `corners`."""
    while True:
        w = [int(x) for x in rng.integers(0, MAX_DEN + 1, size=len(corners))]
        if sum(w):
            break
    total = sum(w)
    n = len(corners[0])
    return tuple(sum(Fraction(wi, total) * c[j] for wi, c in zip(w, corners)) for j in range(n))


def random_coconvex(
    C: cones.PolyhedralCone, spec: RandomSpec, rng: Optional[np.random.Generator] = None
) -> bodies.CoconvexBody:
    """Random body on C.  One apex sits on every extreme ray, which forces
    the complement to be bounded; the rest are drawn from a truncated cone."""
    rng = rng or make_rng(spec.seed, 1)
    u = cones.interior_direction(C)
    h0 = Hyperplane(u, spec.coordinate_bound)
    zero = tuple(Fraction(0) for _ in range(C.dim))
    hits = [cones.ray_hit(zero, g, h0) for g in C.generators]
    for _ in range(MAX_RETRIES):
        pts = []
        for r in hits:
            s = random_rational(rng, Fraction(1, MAX_DEN), 1)
            pts.append(tuple(s * c for c in r))
        while len(pts) < len(hits) + spec.apex_count:
            p = _random_in_simplexlike(rng, [zero] + hits)
            if any(p):
                pts.append(p)
        try:
            return bodies.make_coconvex(C, pts)
        except GeometryError:
            continue
    raise RuntimeError("random_coconvex: retries exhausted")


def random_base(h: Hyperplane, spec: RandomSpec, rng: np.random.Generator, count: int = 4) -> Polytope:
    """Random polytope lying in h (projection of random points)."""
    b = spec.coordinate_bound
    pts = [
        tuple(random_rational(rng, 0, b) for _ in range(h.dim)) for _ in range(max(count, h.dim))
    ]
    return poly.project_onto(poly.convex_hull(pts), h)


def random_cylinder_pair(
    B: Polytope, h: Hyperplane, spec: RandomSpec, rng: Optional[np.random.Generator] = None
) -> tuple[Polytope, Polytope]:
    """Two bodies over the base B, hanging into ``normal . x <= offset``.

    Each is conv(B and b - height(b) * normal for vertices b), so both project
    onto h exactly as B.
    """
    rng = rng or make_rng(spec.seed, 2)
    pair = []
    for _ in range(2):
        tops = []
        for b in B.vertices:
            t = random_rational(rng, Fraction(1, MAX_DEN), spec.coordinate_bound)
            tops.append(tuple(x - t * c for x, c in zip(b, h.normal)))
        pair.append(poly.convex_hull(list(B.vertices) + tops))
    return pair[0], pair[1]


@dataclass(frozen=True)
class LinearRegion:
    """Points meeting every ``all_of`` inequality and, when ``any_of`` is
    nonempty, at least one of those.  Each inequality is ``a . x <= b``."""

    all_of: tuple
    any_of: tuple = ()

    def __call__(self, x) -> bool:
        if not all(dot(a, x) <= b for a, b in self.all_of):
            return False
        return not self.any_of or any(dot(a, x) <= b for a, b in self.any_of)


def polytope_region(P: Polytope) -> LinearRegion:
    return LinearRegion(tuple(P.facets))


def body_region(K: bodies.CoconvexBody) -> LinearRegion:
    in_cone = tuple((tuple(-c for c in a), Fraction(0)) for a in K.cone.facet_normals)
    cuts = tuple((c, g) for c, g in K.complement.facets if g > 0)
    return LinearRegion(in_cone, cuts)


def _box(bounding_box: Polytope):
    lo = [min(v[j] for v in bounding_box.vertices) for j in range(bounding_box.dim)]
    hi = [max(v[j] for v in bounding_box.vertices) for j in range(bounding_box.dim)]
    if any(a == b for a, b in zip(lo, hi)):
        raise DegenerateBox("bounding box has zero extent")
    return lo, hi


def _grid_coeffs(a, b, lo, width, M):
    """Integers c0, c with sign(c0 + sum c_j (2 m_j + 1)) = sign(a.x - b)
    at the grid point x_j = lo_j + width_j (2 m_j + 1) / (2 M)."""
    e0 = dot(a, lo) - b
    es = [Fraction(aj) * w for aj, w in zip(a, width)]
    D = math.lcm(e0.denominator, *(e.denominator for e in es))
    return int(e0 * 2 * M * D), [int(e * D) for e in es]


def _side_le(coeffs, odd, M):
    c0, cs = coeffs
    bound = abs(c0) + sum(abs(c) for c in cs) * 2 * M
    dtype = np.int64 if bound < 2**62 else object
    acc = np.full(odd.shape[0], c0, dtype=dtype)
    for j, c in enumerate(cs):
        if c:
            acc = acc + odd[:, j].astype(dtype) * c
    return acc <= 0


def mc_volume(
    membership: Union[LinearRegion, Callable],
    bounding_box: Polytope,
    samples: int,
    seed: int,
) -> VolumeEstimate:
    """Plain Monte Carlo volume with exact membership at rational points."""
    if samples < 10_000:
        raise ValueError("need at least 10^4 samples")
    lo, hi = _box(bounding_box)
    width = [b - a for a, b in zip(lo, hi)]
    n = len(lo)
    M = 1 << GRID_BITS
    rng = make_rng(seed, 3)
    hits = 0
    if isinstance(membership, LinearRegion):
        all_c = [_grid_coeffs(a, b, lo, width, M) for a, b in membership.all_of]
        any_c = [_grid_coeffs(a, b, lo, width, M) for a, b in membership.any_of]
    done = 0
    while done < samples:
        size = min(CHUNK, samples - done)
        m = rng.integers(0, M, size=(size, n), dtype=np.int64)
        odd = 2 * m + 1
        if isinstance(membership, LinearRegion):
            ok = np.ones(size, dtype=bool)
            for co in all_c:
                ok &= _side_le(co, odd, M)
            if any_c:
                some = np.zeros(size, dtype=bool)
                for co in any_c:
                    some |= _side_le(co, odd, M)
                ok &= some
            hits += int(ok.sum())
        else:
            for row in odd:
                x = tuple(a + w * Fraction(int(k), 2 * M) for a, w, k in zip(lo, width, row))
                hits += bool(membership(x))
        done += size
    box_vol = float(math.prod(width))
    p = hits / samples
    sd = math.sqrt(p * (1 - p) * samples / (samples - 1))
    return VolumeEstimate(p * box_vol, sd * box_vol / math.sqrt(samples), samples)


def body_mc_volume(K: bodies.CoconvexBody, samples: int, seed: int) -> VolumeEstimate:
    box = cones.truncate(K.cone, bodies.choose_hyperplane(K.cone, [K]))
    return mc_volume(body_region(K), box, samples, seed)

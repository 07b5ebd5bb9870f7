from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coconvex import body as B
from coconvex import cone as cones
from coconvex import polytope as P
from coconvex.errors import (
    ApexOutsideCone,
    BodyEmpty,
    ComplementNotBounded,
    ConeMismatch,
    EmptyInput,
    HyperplaneTooLow,
    LambdaOutOfRange,
    NonpositiveScale,
    SectionNotCompact,
)
from coconvex.geom import Hyperplane, vector

from conftest import cone_and_bodies, rationals
from oracles import grid_escapes

F = Fraction


def test_volume_examples(quadrant, octant, unit_triangle):
    assert B.volume(unit_triangle) == F(1, 2)
    assert B.make_coconvex(quadrant, [(2, 0), (0, 1)]).volume == 1
    assert B.make_coconvex(octant, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]).volume == F(1, 6)


def test_redundant_apexes_dropped(quadrant):
    K = B.make_coconvex(quadrant, [(1, 0), (0, 1), (1, 1), (2, 3)])
    assert K.apexes == (vector((0, 1)), vector((1, 0)))


def test_contains_uses_closure(unit_triangle):
    K = unit_triangle
    assert K.contains(vector((F(1, 4), F(1, 4))))
    assert K.contains(vector((F(1, 2), F(1, 2))))  # boundary
    assert not K.contains(vector((1, 1)))
    assert not K.contains(vector((-1, 0)))


def test_make_coconvex_errors(quadrant):
    with pytest.raises(EmptyInput):
        B.make_coconvex(quadrant, [])
    with pytest.raises(ApexOutsideCone):
        B.make_coconvex(quadrant, [(-1, 1)])
    with pytest.raises(BodyEmpty):
        B.make_coconvex(quadrant, [(0, 0)])


def test_unbounded_complement_rejected_and_confirmed_by_grid(quadrant):
    with pytest.raises(ComplementNotBounded):
        B.make_coconvex(quadrant, [(1, 1)])
    # independent check: both axis strips escape (1,1) + C forever
    A = lambda p: p[0] >= 1 and p[1] >= 1  # noqa: E731
    assert grid_escapes(A, (0, 1), (F(1, 2), 0))
    assert grid_escapes(A, (1, 0), (0, F(1, 2)))


def test_oplus_example(worked_pair):
    K = B.oplus(*worked_pair)
    assert K.apexes == tuple(vector(p) for p in [(0, 3), (1, 1), (3, 0)])
    assert K.volume == 3


def test_combine_example(worked_pair):
    K1, K2 = worked_pair
    assert B.combine(F(1, 2), K1, K2).volume == F(3, 4)
    assert B.combine(0, K1, K2) == K1
    assert B.combine(1, K1, K2) == K2
    with pytest.raises(LambdaOutOfRange):
        B.combine(F(3, 2), K1, K2)


def test_cap_examples(unit_triangle):
    h = B.choose_hyperplane(unit_triangle.cone, [unit_triangle])
    assert h == Hyperplane((1, 1), 2)
    assert P.volume(B.build_cap(unit_triangle, h)) == F(3, 2)
    h4 = Hyperplane((1, 1), 4)
    assert P.volume(B.build_cap(unit_triangle, h4)) == F(15, 2)
    assert B.volume(unit_triangle, h4) == F(1, 2)


def test_cap_errors(unit_triangle):
    with pytest.raises(HyperplaneTooLow):
        B.build_cap(unit_triangle, Hyperplane((1, 1), 1))
    with pytest.raises(SectionNotCompact):
        B.build_cap(unit_triangle, Hyperplane((0, 1), 3))


def test_homothety(quadrant, unit_triangle, worked_pair):
    assert B.detect_homothety(unit_triangle, B.make_coconvex(quadrant, [(3, 0), (0, 3)])) == F(1, 3)
    assert B.detect_homothety(*worked_pair) is None


def test_scale_errors(unit_triangle):
    with pytest.raises(NonpositiveScale):
        B.scale(unit_triangle, 0)


def test_cone_mismatch(unit_triangle):
    C2 = cones.validate([(1, 0), (1, 1)])
    K2 = B.make_coconvex(C2, [(1, 0), (1, 1)])
    with pytest.raises(ConeMismatch):
        B.oplus(unit_triangle, K2)


@given(cone_and_bodies(dim=2, count=1), rationals(lo=1, hi=8, max_den=4))
def test_cap_conservation_and_independence(data, factor):
    C, (K,) = data
    h = B.choose_hyperplane(C, [K])
    h2 = Hyperplane(h.normal, h.offset * factor)
    for g in (h, h2):
        if any(sum(a * b for a, b in zip(g.normal, p)) >= g.offset for p in K.apexes):
            continue
        cap = P.volume(B.build_cap(K, g))
        assert B.volume(K, g) + cap == P.volume(cones.truncate(C, g))
        assert B.volume(K, g) == K.volume


@given(cone_and_bodies(dim=3, count=1))
def test_conservation_in_space(data):
    C, (K,) = data
    h = B.choose_hyperplane(C, [K])
    # a second admissible normal: tilt u towards one generator
    g = C.generators[0]
    k = 1 + max(abs(sum(a * b for a, b in zip(g, r))) for r in C.generators)
    tilted = tuple(k * a + b for a, b in zip(h.normal, g))
    assert cones.in_dual_interior(C, tilted)
    top = max(sum(a * b for a, b in zip(tilted, p)) for p in K.apexes)
    other = Hyperplane(tilted, 3 * top)
    assert B.volume(K, other) == K.volume > 0
    assert K.volume + P.volume(B.build_cap(K, other)) == P.volume(cones.truncate(C, other))


@given(cone_and_bodies(dim=2, count=3))
def test_oplus_commutative_associative(data):
    _, (K1, K2, K3) = data
    assert B.oplus(K1, K2) == B.oplus(K2, K1)
    assert B.oplus(B.oplus(K1, K2), K3) == B.oplus(K1, B.oplus(K2, K3))


@given(cone_and_bodies(dim=3, count=1), rationals(lo=0, hi=4, max_den=8).filter(lambda t: t > 0))
def test_scale_homogeneity(data, t):
    _, (K,) = data
    assert B.scale(K, t).volume == t**3 * K.volume
    # scaling through the apex list agrees with the fast path
    assert B.scale(K, t) == B.make_coconvex(K.cone, [tuple(t * c for c in p) for p in K.apexes])


@given(cone_and_bodies(dim=2, count=1), rationals(lo=0, hi=1, max_den=16))
def test_combine_with_itself(data, lam):
    _, (K,) = data
    assert B.combine(lam, K, K) == K


@given(cone_and_bodies(dim=2, count=2))
def test_oplus_shrinks_complement(data):
    # K1 is contained in K1 ⊕ K2, so the volume can only grow
    _, (K1, K2) = data
    S = B.oplus(K1, K2)
    assert S.volume >= K1.volume and S.volume >= K2.volume
    assert all(S.contains(p) for p in K1.apexes)


@given(cone_and_bodies(dim=2, count=1), st.integers(1, 5))
def test_membership_matches_complement(data, k):
    _, (K,) = data
    for p in K.apexes:
        inner = tuple(c * F(k, k + 1) for c in p)
        outer = tuple(c * F(k + 1, k) for c in p)
        assert K.contains(inner)
        assert K.contains(p)
        # points beyond an apex along its ray lie in the complement interior
        # unless they stay on the boundary facet
        assert not K.contains(outer) or any(
            sum(a * b for a, b in zip(c, outer)) == g for c, g in K.complement.facets
        )

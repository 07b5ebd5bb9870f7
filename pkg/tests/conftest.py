from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from coconvex import body as bodies
from coconvex import cone as cones
from coconvex.oracle import RandomSpec, make_rng, random_coconvex, random_cone

settings.register_profile(
    "exact", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")


@pytest.fixture
def quadrant():
    return cones.validate([(1, 0), (0, 1)])


@pytest.fixture
def octant():
    return cones.validate([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture
def unit_triangle(quadrant):
    return bodies.make_coconvex(quadrant, [(1, 0), (0, 1)])


@pytest.fixture
def worked_pair(quadrant):
    return (
        bodies.make_coconvex(quadrant, [(2, 0), (0, 1)]),
        bodies.make_coconvex(quadrant, [(1, 0), (0, 2)]),
    )


def rationals(lo=-4, hi=4, max_den=8):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    ).filter(lambda x: lo <= x <= hi)


def points(dim, **kw):
    return st.tuples(*[rationals(**kw)] * dim)


@st.composite
def cone_and_bodies(draw, dim=2, count=2):
    """A random cone with `count` random bodies on it, via the seeded generators."""
    seed = draw(st.integers(0, 2**32))
    rng = make_rng(seed, 77)
    spec = RandomSpec(dim=dim, cone_rays=dim + draw(st.integers(0, 1)),
                      apex_count=draw(st.integers(1, 3)), seed=seed)
    C = random_cone(spec, rng)
    return C, [random_coconvex(C, spec, rng) for _ in range(count)]

import itertools

import pytest
from hypothesis import settings, strategies as st

from minmult.complex import build_complex
from minmult.monomial import minimal_generators

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def complexes(draw, max_vertices=6):
    """A complex on 1..max_vertices vertices generated by random faces."""
    v = draw(st.integers(1, max_vertices))
    subsets = [c for k in range(1, v + 1) for c in itertools.combinations(range(1, v + 1), k)]
    faces = draw(st.lists(st.sampled_from(subsets), min_size=1, max_size=8))
    return build_complex(v, faces + [(i,) for i in range(1, v + 1)])


@st.composite
def monomial_ideals(draw, max_vars=4, max_exp=3):
    n = draw(st.integers(1, max_vars))
    vec = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=5))
    return minimal_generators(gens, n)


@pytest.fixture
def hanano_complex():
    return build_complex(5, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5), (2, 4, 5)])

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import complexes
from minmult.complex import (
    CapExceeded,
    ComplexError,
    SimplicialComplex,
    alexander_dual,
    build_complex,
    canonical_form,
    cyclic_polytope_boundary,
    disjoint_union,
    enumerate_complexes,
    enumerate_pure_complexes,
    f_vector,
    h_vector,
    induced_subcomplex,
    link,
    minimal_nonfaces,
    simplex,
)


def test_golden_complex_vectors(hanano_complex):
    assert f_vector(hanano_complex) == (1, 5, 10, 5)
    assert h_vector(f_vector(hanano_complex)) == (1, 2, 3, -1)
    assert hanano_complex.dim == 2 and hanano_complex.is_pure


def test_minimal_nonfaces_of_two_edges():
    two_edges = build_complex(4, [(1, 2), (3, 4)])
    assert minimal_nonfaces(two_edges) == [(1, 3), (1, 4), (2, 3), (2, 4)]


def test_link_and_restriction():
    octahedron = build_complex(6, [(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])
    lk = link(octahedron, [1])
    assert lk.num_vertices == 4 and f_vector(lk) == (1, 4, 4)
    assert f_vector(induced_subcomplex(octahedron, [1, 2])) == (1, 2)
    with pytest.raises(ComplexError):
        link(octahedron, [1, 2])


def test_bad_input_is_rejected():
    with pytest.raises(ComplexError):
        build_complex(3, [(1, 4)])
    with pytest.raises(ComplexError):
        build_complex(3, [(1, 2)])
    with pytest.warns(UserWarning):
        assert build_complex(3, [(1, 2)], normalize=True).num_vertices == 2
    with pytest.raises(ComplexError):
        alexander_dual(simplex(3))


@given(complexes())
def test_alexander_dual_is_an_involution(delta):
    if delta.is_face((1 << delta.num_vertices) - 1):
        return
    dual = alexander_dual(delta)
    assert alexander_dual(dual) == delta


@given(complexes(), st.randoms(use_true_random=False))
def test_canonical_form_ignores_labels(delta, rnd):
    perm = list(range(delta.num_vertices))
    rnd.shuffle(perm)
    relabeled = build_complex(delta.num_vertices, [[perm[i - 1] + 1 for i in f] for f in delta.facet_sets()])
    assert canonical_form(relabeled) == canonical_form(delta)


def test_canonical_form_separates_the_two_pure_graphs_on_four_edges():
    cycle = build_complex(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    paw = build_complex(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
    assert canonical_form(cycle) != canonical_form(paw)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 20), (5, 180)])
def test_number_of_complexes_using_every_vertex(n, count):
    # differences of the unlabeled downset counts 2, 3, 5, 10, 30, 210
    assert sum(1 for _ in enumerate_complexes(n)) == count


def test_every_complex_on_four_vertices_is_distinct_up_to_isomorphism():
    forms = [canonical_form(d) for d in enumerate_complexes(4)]
    assert len(set(forms)) == len(forms)


def test_pure_enumeration_against_brute_force():
    for n, dim in [(4, 1), (5, 1), (5, 2)]:
        brute = set()
        cands = list(itertools.combinations(range(1, n + 1), dim + 1))
        for k in range(1, len(cands) + 1):
            for facets in itertools.combinations(cands, k):
                if len({x for f in facets for x in f}) == n:
                    brute.add(canonical_form(build_complex(n, facets)))
        listed = [canonical_form(d) for d in enumerate_pure_complexes(n, dim)]
        assert len(listed) == len(set(listed)) == len(brute)


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_pure_complexes(9, 3))


@pytest.mark.parametrize("n, f, facets", [(5, 2, 5), (6, 4, 9), (7, 2, 7), (6, 2, 6)])
def test_cyclic_polytope_facet_counts(n, f, facets):
    boundary = cyclic_polytope_boundary(n, f)
    assert len(boundary.facets) == facets and boundary.dim == f - 1


def test_disjoint_union_counts_facets():
    two = disjoint_union(simplex(3), simplex(3))
    assert two.num_vertices == 6 and len(two.facets) == 2

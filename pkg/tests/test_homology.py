import pytest
from hypothesis import given

from conftest import complexes
from minmult.complex import alexander_dual, build_complex, cyclic_polytope_boundary, f_vector, simplex
from minmult.homology import (
    QQ,
    FieldSpec,
    betti_table_dual_sr,
    betti_table_sr,
    euler_characteristic,
    local_cohomology_sr,
    reduced_homology_dims,
)
from minmult.monomial import complex_to_ideal, graded_betti_koszul

GF2 = FieldSpec(2)


def _real_projective_plane():
    return build_complex(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                             (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)])


def test_projective_plane_depends_on_the_characteristic():
    rp2 = _real_projective_plane()
    assert not any(reduced_homology_dims(rp2, QQ))
    h2 = reduced_homology_dims(rp2, GF2)
    assert h2[2] == 1 and h2[3] == 1  # H~_1 and H~_2 over GF(2), index shifted by the empty face
    assert betti_table_sr(rp2, QQ) != betti_table_sr(rp2, GF2)


def test_sphere_homology():
    sphere = cyclic_polytope_boundary(6, 4)
    dims = reduced_homology_dims(sphere)
    assert dims[-1] == 1 and sum(dims) == 1


@given(complexes())
def test_euler_characteristic_matches_homology(delta):
    dims = reduced_homology_dims(delta)
    # dims[k] is H~_{k-1}; the alternating sum of f_{k-1} equals that of homology
    assert euler_characteristic(f_vector(delta)) == sum((-1) ** (k - 1) * x for k, x in enumerate(dims))


@given(complexes(max_vertices=5))
def test_restriction_betti_numbers_equal_koszul_homology(delta):
    assert betti_table_sr(delta).entries == graded_betti_koszul(complex_to_ideal(delta)).entries


@given(complexes(max_vertices=5))
def test_dual_betti_numbers_from_links(delta):
    if delta.is_face((1 << delta.num_vertices) - 1):
        return
    assert betti_table_dual_sr(delta).entries == betti_table_sr(alexander_dual(delta)).entries


@given(complexes(max_vertices=6))
def test_depth_and_regularity_agree_with_resolution(delta):
    lc = local_cohomology_sr(delta)
    betti = betti_table_sr(delta)
    v = delta.num_vertices
    assert lc.depth == v - betti.pd
    assert lc.regularity == betti.reg


def test_local_cohomology_of_two_points():
    lc = local_cohomology_sr(build_complex(2, [(1,), (2,)]))
    assert lc.d == 1 and lc.lengths[0] == 0
    assert lc.rows[1][0] == 1 and lc.depth == 1


def test_local_cohomology_of_a_simplex_sits_in_the_top_row():
    lc = local_cohomology_sr(simplex(3))
    assert lc.lengths[:3] == (0, 0, 0)
    assert lc.a_invariant == -3


def test_disconnected_curve_has_one_dimensional_h1():
    two_edges = build_complex(4, [(1, 2), (3, 4)])
    lc = local_cohomology_sr(two_edges)
    assert lc.lengths[1] == 1 and lc.rows[1] == {0: 1}
    assert lc.depth == 1


@pytest.mark.parametrize("char", [0, 2, 3])
def test_field_spec_accepts_primes_only(char):
    assert FieldSpec(char).characteristic == char


def test_field_spec_rejects_composites():
    with pytest.raises(ValueError):
        FieldSpec(4)

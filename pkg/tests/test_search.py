import pytest

from minmult.complex import canonical_form
from minmult.families import hanano
from minmult.search import aggregate, census, class_summaries, hunt_kamoi_vogel_equality


def test_five_vertex_surfaces_with_minimal_multiplicity():
    rows = census(5, 2, require_minimal=True)
    assert len(rows) == 1
    row = rows[0]
    assert (row.d, row.c, row.q, row.e, row.h) == (3, 2, 3, 5, 1)
    assert row.attains_h_max and row.count == 1
    assert canonical_form(row.witness_complex()) == canonical_form(hanano().obj)


def test_graph_census_covers_every_class():
    rows = census(4, 1)
    assert len(rows) == 5
    assert sum(r.count for r in rows) == len(class_summaries(4, 1))


def test_filters_and_per_class_listing():
    rows = census(5, 1, q=2, per_class=True)
    assert rows and all(r.q == 2 for r in rows)
    assert all(len(r.classes) == r.count for r in rows)


def test_worker_count_does_not_change_the_result():
    assert census(5, 1, jobs=2, per_class=True) == census(5, 1, jobs=1, per_class=True)


def test_aggregation_is_order_stable():
    summaries = class_summaries(4, 1)
    assert aggregate(summaries) == aggregate(list(summaries))


@pytest.mark.slow
def test_no_kamoi_vogel_equality_without_linear_resolution_up_to_five_vertices():
    assert hunt_kamoi_vogel_equality(5) == []

import pytest

from minmult.families import (
    FAMILIES,
    FamilyError,
    FamilySpec,
    cyclic_dual,
    disjoint_simplices,
    exmulti2,
    generate_family,
    golden_mismatches,
    x_power_times_irrelevant,
    hanano,
    non_buchsbaum,
    y_power_times_irrelevant,
)
from minmult.invariants import analyze_monomial, analyze_sr


def _analyse(inst):
    return analyze_sr(inst.obj) if inst.is_complex else analyze_monomial(inst.obj)


GOLDEN = [
    hanano(),
    disjoint_simplices(2, 2), disjoint_simplices(3, 2), disjoint_simplices(2, 3),
    x_power_times_irrelevant(1, 2, 2), x_power_times_irrelevant(2, 2, 3), x_power_times_irrelevant(2, 3, 3), x_power_times_irrelevant(1, 3, 4),
    cyclic_dual(2, 4), cyclic_dual(3, 4), cyclic_dual(2, 6),
    y_power_times_irrelevant(2, 3), y_power_times_irrelevant(3, 2),
    non_buchsbaum(2, 2), non_buchsbaum(2, 3), non_buchsbaum(3, 4),
    exmulti2(1, 2), exmulti2(2, 2), exmulti2(3, 2), exmulti2(4, 2),
    exmulti2(1, 3), exmulti2(2, 3), exmulti2(4, 3),
]


@pytest.mark.parametrize("inst", GOLDEN, ids=lambda i: f"{i.spec.name}-{dict(i.spec.params)}")
def test_family_goldens(inst):
    assert golden_mismatches(inst, _analyse(inst)) == []


def test_every_family_is_reachable_by_name():
    params = {
        "disjoint_simplices": {"d": 2, "e": 2}, "goto_family": {"c": 1, "d": 2, "q": 2},
        "f_times_irrelevant": {"f": (1, 2)}, "cyclic_dual": {"q": 2, "d": 4}, "hanano": {},
        "non_buchsbaum": {"d": 2, "q": 3}, "exmulti2": {"item": 1, "d": 2},
    }
    assert set(params) == set(FAMILIES)
    for name, p in params.items():
        assert generate_family(FamilySpec.of(name, **p)).spec.name == name


def test_saturation_route_leaves_item_three_open():
    r = analyze_monomial(exmulti2(3, 2).obj)
    assert r.buchsbaum == "unknown" and r.minimal_multiplicity == "unknown"


@pytest.mark.parametrize("name, params", [
    ("goto_family", {"c": 1}),
    ("no_such_family", {}),
    ("exmulti2", {"item": 5, "d": 2}),
    ("exmulti2", {"item": 1, "d": 0}),
])
def test_bad_family_requests(name, params):
    with pytest.raises(FamilyError):
        generate_family(name, **params)


def test_disjoint_points_and_a_single_simplex_miss_their_golden_values():
    # two points: a Cohen-Macaulay curve with e = 2, above the bound 1
    points = disjoint_simplices(1, 2)
    assert golden_mismatches(points, _analyse(points)) == [
        "minimal_multiplicity: expected yes, got no", "minimal_multiplicity_degree: expected 2, got None"]
    # one simplex is a polynomial ring, so q = 1
    single = disjoint_simplices(2, 1)
    assert _analyse(single).q == 1

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import complexes, monomial_ideals
from minmult.complex import build_complex, simplex
from minmult.families import hanano, non_buchsbaum, x_power_times_irrelevant
from minmult.homology import FieldSpec
from minmult.invariants import (
    EquivalenceViolation,
    Verdict,
    analyze_monomial,
    analyze_sr,
    h_max,
    is_buchsbaum_sr,
    is_cohen_macaulay_sr,
    linear_h_vector,
    minimal_prime_dimensions,
)
from minmult.monomial import minimal_generators


@pytest.fixture(scope="module")
def hanano_report():
    return analyze_sr(hanano().obj)


def test_hanano_invariants(hanano_report):
    r = hanano_report
    assert (r.v, r.d, r.c, r.q, r.e) == (5, 3, 2, 3, 5)
    assert (r.depth, r.reg, r.a_invariant, r.I_invariant) == (2, 2, -2, 1)
    assert r.h_lengths == (0, 0, 1)
    assert r.betti.entries == ((0, 0, 1), (1, 3, 5), (2, 4, 5), (3, 5, 1))
    assert r.minimal_multiplicity == "yes" and r.minimal_multiplicity_degree == 3


@pytest.mark.parametrize("name, verdict", [
    ("lower_bound", Verdict.EQUALITY),
    ("main_equivalences", Verdict.HOLDS),
    ("a_invariant_bound", Verdict.EQUALITY),
    ("kamoi_vogel", Verdict.EQUALITY),
    ("not_cohen_macaulay", Verdict.HOLDS),
    ("srmm", Verdict.HOLDS),
    ("cm_bound", Verdict.NOT_APPLICABLE),
])
def test_hanano_check_verdicts(hanano_report, name, verdict):
    assert hanano_report.check(name).verdict is verdict


def test_not_applicable_checks_say_why(hanano_report):
    for c in hanano_report.checks:
        if c.verdict is Verdict.NOT_APPLICABLE:
            assert c.get("reason")


def test_h_max_and_linear_h_vector():
    assert h_max(2, 3, 3) == Fraction(1)
    assert h_max(1, 4, 2) == Fraction(1, 4)
    assert linear_h_vector(2, 3, 3, 1) == (1, 2, 3, -1)
    with pytest.raises(ValueError):
        h_max(0, 3, 2)


def test_four_cycle_is_cohen_macaulay():
    square = build_complex(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    r = analyze_sr(square)
    assert r.cohen_macaulay and r.is_buchsbaum and r.q == 2 and r.e == 4
    assert r.minimal_multiplicity == "no"
    assert r.check("cm_bound").verdict in (Verdict.HOLDS, Verdict.EQUALITY)


def test_two_disjoint_edges_have_minimal_multiplicity():
    r = analyze_sr(build_complex(4, [(1, 2), (3, 4)]))
    assert not r.cohen_macaulay and r.is_buchsbaum
    assert r.minimal_multiplicity == "yes" and r.reg == 1


def test_simplex_is_a_polynomial_ring():
    r = analyze_sr(simplex(4))
    assert r.polynomial_ring and r.cohen_macaulay and r.minimal_multiplicity == "yes"


def test_buchsbaum_detection_on_complexes():
    pinched = build_complex(5, [(1, 2, 3), (1, 4, 5)])
    assert not is_buchsbaum_sr(pinched)
    assert is_cohen_macaulay_sr(simplex(3))


@pytest.mark.parametrize("q, verdict", [(2, "yes"), (3, "no"), (4, "no")])
def test_non_buchsbaum_family(q, verdict):
    r = analyze_monomial(non_buchsbaum(2, q).obj)
    assert r.buchsbaum == verdict


def test_x_power_times_irrelevant_values():
    inst = x_power_times_irrelevant(2, 2, 3)
    r = analyze_monomial(inst.obj)
    assert (r.d, r.c, r.q, r.e, r.depth, r.reg) == (2, 2, 3, 3, 0, 2)
    assert r.h_lengths[0] == 3 and r.minimal_multiplicity == "yes"


def test_multiplicity_one_keeps_only_the_first_equivalence():
    # (X1, X2)·𝔑 in four variables has e = 1 but c = 2, q = 2
    r = analyze_monomial(x_power_times_irrelevant(2, 2, 2).obj)
    assert r.e == 1 and r.c == 2
    c = r.check("small_multiplicity")
    assert c.verdict is Verdict.HOLDS and c.get("f_times_irrelevant") is False


def test_minimal_primes():
    ideal = minimal_generators([(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0)], 4)
    assert sorted(minimal_prime_dimensions(ideal)) == [2, 2, 2]


def test_characteristic_is_recorded():
    assert analyze_sr(hanano().obj, FieldSpec(2)).characteristic == 2


def test_violations_carry_a_dump():
    exc = EquivalenceViolation("x", {"check": "demo"})
    assert exc.dump["check"] == "demo"


@given(complexes(max_vertices=5))
def test_no_theorem_fails_on_small_complexes(delta):
    r = analyze_sr(delta)
    assert not [c.name for c in r.checks if c.kind == "bound" and c.verdict is Verdict.FAILS]


@given(complexes(max_vertices=6))
def test_minimal_multiplicity_consequences(delta):
    r = analyze_sr(delta)
    if r.minimal_multiplicity != "yes" or r.polynomial_ring:
        return
    assert r.reg == r.q - 1
    assert not r.cohen_macaulay
    assert r.check("hoa_miyazaki").verdict is Verdict.HOLDS
    assert r.check("kamoi_vogel").verdict is Verdict.EQUALITY
    assert r.check("main_equivalences").verdict is Verdict.HOLDS


@given(monomial_ideals(max_vars=3, max_exp=2))
def test_monomial_analysis_is_consistent(ideal):
    if ideal.is_unit:
        return
    r = analyze_monomial(ideal)
    assert r.hilbert.multiplicity == r.e
    if r.buchsbaum == "yes" and r.minimal_multiplicity == "yes" and not r.polynomial_ring:
        assert not r.cohen_macaulay
    if r.cohen_macaulay:
        assert r.buchsbaum == "yes" and r.depth == r.d

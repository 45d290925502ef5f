from math import comb

from hypothesis import given, strategies as st

from conftest import monomial_ideals
from minmult.monomial import minimal_generators, saturation
from minmult.oracles import (
    in_saturation,
    monomials_of_degree,
    saturation_equals_ideal,
    saturation_power,
    standard_monomial_counts,
    zeroth_local_cohomology,
)


@given(st.integers(1, 4), st.integers(0, 5))
def test_monomial_counts(n, deg):
    mons = list(monomials_of_degree(n, deg))
    assert len(mons) == len(set(mons)) == comb(n + deg - 1, deg)


def test_counts_of_a_complete_intersection():
    assert standard_monomial_counts(minimal_generators([(2, 0), (0, 2)], 2), 4) == [1, 2, 1, 0, 0]


def test_x_times_irrelevant():
    ideal = minimal_generators([(2, 0), (1, 1)], 2)
    assert in_saturation(ideal, (1, 0), saturation_power(ideal))
    assert not in_saturation(ideal, (0, 1), saturation_power(ideal))
    assert zeroth_local_cohomology(ideal) == {1: 1}
    assert not saturation_equals_ideal(ideal)


@given(monomial_ideals(max_vars=3, max_exp=2))
def test_saturation_membership_matches_the_saturation_ideal(ideal):
    sat = saturation(ideal)
    k = saturation_power(ideal)
    for deg in range(4):
        for m in monomials_of_degree(ideal.nvars, deg):
            assert in_saturation(ideal, m, k) == sat.contains(m)

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import complexes, monomial_ideals
from minmult.monomial import (
    colon,
    complex_to_ideal,
    graded_betti_koszul,
    hilbert_series,
    ideal_to_complex,
    intersection,
    local_cohomology_zero,
    maximal_ideal,
    minimal_generators,
    multiply_by_irrelevant,
    power_of_variables,
    saturation,
    sr_bridge,
)
from minmult.oracles import standard_monomial_counts, zeroth_local_cohomology


def test_minimal_generators_drop_multiples():
    ideal = minimal_generators([(1, 1), (2, 1), (0, 3), (1, 3)], 2)
    assert set(ideal.gens) == {(1, 1), (0, 3)}


def test_power_of_irrelevant_ideal_times_x():
    # X·(X, Y1, Y2)^2 with c = 1 generators in X and two Y's
    ideal = multiply_by_irrelevant(multiply_by_irrelevant(minimal_generators([(1, 0, 0)], 3)))
    assert len(ideal.gens) == 6 and all(sum(g) == 3 for g in ideal.gens)


def test_saturation_of_x_times_irrelevant():
    ideal = minimal_generators([(2, 0), (1, 1)], 2)
    assert saturation(ideal).gens == ((1, 0),)
    assert local_cohomology_zero(ideal) == {1: 1}


def test_colon_and_intersection():
    ideal = minimal_generators([(1, 1, 0), (0, 1, 1)], 3)
    assert colon(ideal, (0, 1, 0)) == minimal_generators([(1, 0, 0), (0, 0, 1)], 3)
    a = minimal_generators([(1, 0)], 2)
    b = minimal_generators([(0, 1)], 2)
    assert intersection(a, b).gens == ((1, 1),)


def test_hilbert_series_of_two_skew_lines():
    hs = hilbert_series(minimal_generators([(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)], 4))
    assert hs.dimension == 2 and hs.multiplicity == 2
    assert hs.coefficients(4) == [1, 4, 6, 8, 10]


@given(monomial_ideals())
def test_hilbert_series_counts_standard_monomials(ideal):
    hs = hilbert_series(ideal)
    assert hs.coefficients(7) == standard_monomial_counts(ideal, 7)


@given(monomial_ideals())
def test_hilbert_polynomial_agrees_in_high_degree(ideal):
    hs = hilbert_series(ideal)
    n = max(hs.degree, 0) + 1
    assert hs.hilbert_polynomial(n) == hs.coefficient(n)


@given(monomial_ideals(max_vars=3, max_exp=3))
def test_zeroth_local_cohomology_against_brute_force(ideal):
    assert local_cohomology_zero(ideal) == zeroth_local_cohomology(ideal)


@given(monomial_ideals(max_vars=3, max_exp=2))
def test_koszul_betti_numbers_give_the_hilbert_numerator(ideal):
    betti = graded_betti_koszul(ideal)
    top = max(j for _, j, _ in betti.entries)
    numerator = [0] * (top + 1)
    for i, j, b in betti.entries:
        numerator[j] += (-1) ** i * b
    num, exp = hilbert_series(ideal).reduced
    # K(t) = h(t)(1-t)^(v-dim)
    k = list(num)
    for _ in range(ideal.nvars - exp):
        k = [a - b for a, b in zip(k + [0], [0] + k)]
    while numerator and numerator[-1] == 0:
        numerator.pop()
    assert numerator == k


@given(complexes())
def test_stanley_reisner_bridge_round_trip(delta):
    assert sr_bridge(sr_bridge(delta)) == delta
    assert ideal_to_complex(complex_to_ideal(delta)) == delta


def test_bridge_rejects_non_squarefree_ideals():
    with pytest.raises(ValueError):
        ideal_to_complex(minimal_generators([(2, 0)], 2))
    with pytest.raises(TypeError):
        sr_bridge("X1*X2")


def test_square_of_x_times_irrelevant_has_ten_cubics():
    xs = minimal_generators([(1, 0, 0, 0), (0, 1, 0, 0)], 4)
    ideal = multiply_by_irrelevant(minimal_generators([(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0)], 4))
    assert len(ideal.gens) == 10 and all(sum(g) == 3 for g in ideal.gens)
    assert len(multiply_by_irrelevant(multiply_by_irrelevant(xs)).gens) == 16


def test_maximal_ideal_and_powers():
    assert len(maximal_ideal(3).gens) == 3
    assert set(power_of_variables(3, [0, 2], 2).gens) == {(2, 0, 0), (1, 0, 1), (0, 0, 2)}


def test_reduced_series_trims_trailing_zeros():
    hs = hilbert_series(minimal_generators([(1, 0), (0, 1)], 2))
    assert hs.reduced == ((1,), 0) and hs.multiplicity == 1
    assert hs.hilbert_polynomial(5) == 0 and Fraction(hs.multiplicity) == 1

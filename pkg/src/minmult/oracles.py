"""Brute-force references used to cross-check the fast monomial routines.

Everything here enumerates monomials degree by degree; it is only meant for
small ideals.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator

from .monomial import Monomial, MonomialIdeal, degree


def monomials_of_degree(nvars: int, deg: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree ``deg``, lexicographically descending."""
    if nvars == 0:
        if deg == 0:
            yield ()
        return
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(nvars - 1, deg - first):
            yield (first,) + rest


def standard_monomial_counts(ideal: MonomialIdeal, upto: int) -> list[int]:
    """dim_k (S/I)_n for n = 0..upto, by counting monomials outside I."""
    return [sum(1 for m in monomials_of_degree(ideal.nvars, n) if not ideal.contains(m))
            for n in range(upto + 1)]


def in_saturation(ideal: MonomialIdeal, m: Monomial, power: int) -> bool:
    """m·𝔑^power ⊆ I, tested on every monomial of degree ``power``."""
    return all(ideal.contains(tuple(a + b for a, b in zip(m, u)))
               for u in monomials_of_degree(ideal.nvars, power))


def saturation_power(ideal: MonomialIdeal) -> int:
    """A power k with I : 𝔑^k = I : 𝔑^∞.

    A monomial of degree deg(lcm) has some exponent u_i >= L_i, and a saturated
    m already satisfies m·x_i^{L_i} ∈ I.
    """
    return max(1, degree(ideal.lcm_exponent))


def zeroth_local_cohomology(ideal: MonomialIdeal, upto: int | None = None) -> dict[int, int]:
    """Hilbert function of (I : 𝔑^∞)/I, degree by degree.

    A monomial of (I : 𝔑^∞) outside I with some exponent above the lcm would give
    infinitely many such monomials, so only degrees up to deg(lcm) matter.
    """
    power = saturation_power(ideal)
    top = degree(ideal.lcm_exponent) if upto is None else upto
    out: Counter[int] = Counter()
    for n in range(top + 1):
        for m in monomials_of_degree(ideal.nvars, n):
            if not ideal.contains(m) and in_saturation(ideal, m, power):
                out[n] += 1
    return dict(sorted(out.items()))


def saturation_equals_ideal(ideal: MonomialIdeal) -> bool:
    return not zeroth_local_cohomology(ideal)

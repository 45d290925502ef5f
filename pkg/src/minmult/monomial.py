"""Monomial ideals: generators, colons, saturation, Hilbert series, Koszul Betti numbers."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .complex import SimplicialComplex, mask_of, popcount, vertices_of
from .homology import QQ, BettiTable, FieldSpec
from .linalg import rank

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def order_key(m: Monomial):
    """Degree first, then lexicographic with X_1 > X_2 > ...."""
    return (sum(m), tuple(-x for x in m))


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=sum)
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=order_key))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of k[X_1..X_v], stored by its minimal generators."""

    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if len(g) != self.nvars or any(e < 0 for e in g):
                raise ValueError(f"exponent vector {g} does not fit {self.nvars} variables")

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    @cached_property
    def lcm_exponent(self) -> Monomial:
        out = (0,) * self.nvars
        for g in self.gens:
            out = lcm(out, g)
        return out

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.nvars}, {list(self.gens)})"


def minimal_generators(gens: Iterable[Sequence[int]], nvars: int | None = None) -> MonomialIdeal:
    gens = [tuple(int(e) for e in g) for g in gens]
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for the zero ideal")
        nvars = len(gens[0])
    return MonomialIdeal(nvars, _minimalize(gens))


def variable(nvars: int, i: int, power: int = 1) -> Monomial:
    return tuple(power if k == i else 0 for k in range(nvars))


def maximal_ideal(nvars: int) -> MonomialIdeal:
    return minimal_generators([variable(nvars, i) for i in range(nvars)], nvars)


def power_of_variables(nvars: int, indices: Sequence[int], power: int) -> MonomialIdeal:
    """(X_i : i in indices)^power."""
    gens = []
    for combo in itertools.combinations_with_replacement(indices, power):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        gens.append(tuple(m))
    return minimal_generators(gens, nvars)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(
        [tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens], a.nvars
    )


def multiply_by_irrelevant(ideal: MonomialIdeal) -> MonomialIdeal:
    """𝔑·I with 𝔑 = (X_1, ..., X_v)."""
    return product(maximal_ideal(ideal.nvars), ideal)


def colon(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """I : m, generated by g / gcd(g, m)."""
    return minimal_generators([tuple(max(x - y, 0) for x, y in zip(g, m)) for g in ideal.gens], ideal.nvars)


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators([lcm(g, h) for g in a.gens for h in b.gens], a.nvars)


def saturation(ideal: MonomialIdeal) -> MonomialIdeal:
    """I : 𝔑^∞ as the intersection over variables z of the stable colons I : z^∞."""
    v = ideal.nvars
    if ideal.is_zero:
        return ideal
    result = None
    for z in range(v):
        stable = minimal_generators([tuple(0 if k == z else e for k, e in enumerate(g)) for g in ideal.gens], v)
        result = stable if result is None else intersection(result, stable)
    return result if result is not None else ideal


# ---------------------------------------------------------------------------
# Hilbert series

Poly = tuple[int, ...]


def _trim(p: list[int]) -> Poly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def poly_add(a: Sequence[int], b: Sequence[int], sign: int = 1) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += sign * x
    return _trim(out)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_shift(a: Sequence[int], k: int) -> Poly:
    return _trim([0] * k + list(a))


def divide_one_minus_t(p: Sequence[int]) -> Poly:
    """Exact quotient p / (1 - t); requires p(1) = 0."""
    if sum(p) != 0:
        raise ArithmeticError("polynomial is not divisible by 1 - t")
    out, acc = [], 0
    for c in p[:-1]:
        acc += c
        out.append(acc)
    return _trim(out or [0])


def binomial_poly(x: int, r: int) -> Fraction:
    """C(x, r) as a polynomial in x, evaluated at any integer x."""
    num = 1
    for k in range(r):
        num *= x - k
    den = 1
    for k in range(1, r + 1):
        den *= k
    return Fraction(num, den)


@dataclass(frozen=True)
class HilbertSeries:
    """F(t) = numerator(t) / (1 - t)^exponent."""

    numerator: Poly
    exponent: int

    @cached_property
    def reduced(self) -> tuple[Poly, int]:
        num, d = _trim(list(self.numerator)), self.exponent
        if not any(num):
            return (0,), 0
        while d > 0 and sum(num) == 0:
            num = divide_one_minus_t(num)
            d -= 1
        return num, d

    @property
    def dimension(self) -> int:
        return self.reduced[1]

    @property
    def multiplicity(self) -> int:
        return sum(self.reduced[0])

    @property
    def h_polynomial(self) -> Poly:
        return self.reduced[0]

    @property
    def degree(self) -> int:
        """Degree as a rational function: deg Q - d."""
        q, d = self.reduced
        return len(q) - 1 - d

    def coefficient(self, n: int) -> int:
        q, d = self.reduced
        if n < 0:
            return 0
        if d == 0:
            return q[n] if n < len(q) else 0
        return sum(c * comb(n - k + d - 1, d - 1) for k, c in enumerate(q) if k <= n)

    def coefficients(self, upto: int) -> list[int]:
        return [self.coefficient(n) for n in range(upto + 1)]

    def hilbert_polynomial(self, n: int) -> int:
        q, d = self.reduced
        if d == 0:
            return 0
        val = sum(c * binomial_poly(n - k + d - 1, d - 1) for k, c in enumerate(q))
        assert val.denominator == 1
        return int(val)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.reduced == other.reduced

    def __hash__(self) -> int:
        return hash(self.reduced)


def _is_base_case(gens: Sequence[Monomial]) -> bool:
    return all(sum(1 for e in g if e) <= 1 for g in gens)


def _numerator(gens: tuple[Monomial, ...], memo: dict) -> Poly:
    if gens in memo:
        return memo[gens]
    if any(sum(g) == 0 for g in gens):
        out: Poly = (0,)
    elif _is_base_case(gens):
        out = (1,)
        for g in gens:
            out = poly_mul(out, poly_add((1,), poly_shift((1,), sum(g)), -1))
    else:
        nvars = len(gens[0])
        mixed = [g for g in gens if sum(1 for e in g if e) > 1]
        counts = [sum(1 for g in mixed if g[i]) for i in range(nvars)]
        x = max(range(nvars), key=lambda i: (counts[i], -i))
        exps = sorted(g[x] for g in mixed if g[x])
        e = exps[(len(exps) - 1) // 2]
        pivot = variable(nvars, x, e)
        plus = _minimalize(gens + (pivot,))
        quotient = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens))
        # N(I) = N(I + (p)) + t^{deg p} N(I : p)
        out = poly_add(_numerator(plus, memo), poly_shift(_numerator(quotient, memo), e))
    memo[gens] = out
    return out


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of S/I by pivot recursion.

    The pivot variable is the one dividing the most non-pure-power generators
    (lowest index on ties); the pivot power is the median of its positive
    exponents among those generators.  Ideals generated by pure powers of
    distinct variables are the base case, with numerator Π (1 - t^a).
    """
    if ideal.is_zero:
        return HilbertSeries((1,), ideal.nvars)
    return HilbertSeries(_numerator(ideal.gens, {}), ideal.nvars)


def initial_degree(ideal: MonomialIdeal) -> int:
    """Least generator degree; 1 for the zero ideal (polynomial-ring convention)."""
    if ideal.is_zero:
        return 1
    return min(sum(g) for g in ideal.gens)


def quotient_dims(big: MonomialIdeal, small: MonomialIdeal) -> dict[int, int]:
    """Graded dimensions of the finite-length module big / small (small ⊆ big)."""
    a = hilbert_series(small)
    b = hilbert_series(big)
    num = poly_add(a.numerator, b.numerator, -1)
    for _ in range(small.nvars):
        if not any(num):
            break
        num = divide_one_minus_t(num)
    return {n: c for n, c in enumerate(num) if c}


def local_cohomology_zero(ideal: MonomialIdeal) -> dict[int, int]:
    """Graded dimensions of H^0_M(S/I) = (I : 𝔑^∞) / I."""
    return quotient_dims(saturation(ideal), ideal)


# ---------------------------------------------------------------------------
# Koszul homology


def _koszul_strand(ideal: MonomialIdeal, alpha: Monomial, characteristic: int) -> list[int]:
    """dim H_i of the multidegree-alpha strand of K(X) ⊗ S/I, i = 0..|supp alpha|."""
    support = [k for k, e in enumerate(alpha) if e]
    basis: list[list[int]] = [[] for _ in range(len(support) + 1)]
    for size in range(len(support) + 1):
        for sub in itertools.combinations(support, size):
            rest = list(alpha)
            for k in sub:
                rest[k] -= 1
            if not ideal.contains(tuple(rest)):
                basis[size].append(mask_of(sub))
    ranks = [0] * (len(basis) + 1)
    for i in range(1, len(basis)):
        if not basis[i] or not basis[i - 1]:
            continue
        index = {f: r for r, f in enumerate(basis[i - 1])}
        mat = np.zeros((len(basis[i - 1]), len(basis[i])), dtype=np.int64)
        for c, f in enumerate(basis[i]):
            for pos, k in enumerate(vertices_of(f)):
                r = index.get(f & ~(1 << k))
                if r is not None:  # otherwise the target monomial lies in I
                    mat[r, c] = -1 if pos % 2 else 1
        ranks[i] = rank(mat, characteristic)
    return [len(basis[i]) - ranks[i] - ranks[i + 1] for i in range(len(basis))]


def graded_betti_koszul(ideal: MonomialIdeal, field: FieldSpec = QQ,
                        degree_cap: int | None = None) -> BettiTable:
    """β_{i,j}(S/I) = dim Tor_i(S/I, k)_j from Koszul homology.

    The Koszul complex of a monomial quotient splits into multidegree strands;
    only multidegrees below the lcm of the generators can carry homology
    (Taylor resolution), so those strands are summed.  A ``degree_cap`` below
    deg lcm drops the higher strands and marks the table truncated.
    """
    v = ideal.nvars
    if ideal.is_zero:
        return BettiTable.from_dict({(0, 0): 1})
    top = ideal.lcm_exponent
    full = sum(top)
    cap = full if degree_cap is None else degree_cap
    if cap < max(sum(g) for g in ideal.gens):
        raise ValueError(f"degree cap {cap} is below a generator degree")
    table: dict[tuple[int, int], int] = defaultdict(int)
    for alpha in itertools.product(*(range(e + 1) for e in top)):
        j = sum(alpha)
        if j > cap:
            continue
        for i, h in enumerate(_koszul_strand(ideal, alpha, field.characteristic)):
            if h:
                table[(i, j)] += h
    return BettiTable.from_dict(table, truncated=cap < full)


# ---------------------------------------------------------------------------
# Stanley-Reisner bridge


def complex_to_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """I_Δ, generated by the minimal nonfaces (ghost vertices give linear generators)."""
    from .complex import minimal_nonface_masks

    v = delta.num_vertices
    return minimal_generators(
        [tuple(1 if m >> k & 1 else 0 for k in range(v)) for m in minimal_nonface_masks(delta)], v
    )


def ideal_to_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside a squarefree I."""
    if not ideal.is_squarefree:
        raise ValueError("only squarefree monomial ideals come from simplicial complexes")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no faces")
    v = ideal.nvars
    supports = [mask_of(k for k, e in enumerate(g) if e) for g in ideal.gens]
    full = (1 << v) - 1

    def is_face(w: int) -> bool:
        return not any(s & ~w == 0 for s in supports)

    facets = []
    for w in range(1 << v):
        if is_face(w) and all(not is_face(w | (1 << k)) for k in range(v) if not w >> k & 1):
            facets.append(w)
    return SimplicialComplex.from_masks(v, facets or [0])


def sr_bridge(obj):
    """Complex -> Stanley-Reisner ideal, or squarefree ideal -> complex."""
    if isinstance(obj, SimplicialComplex):
        return complex_to_ideal(obj)
    if isinstance(obj, MonomialIdeal):
        return ideal_to_complex(obj)
    raise TypeError(f"expected a SimplicialComplex or MonomialIdeal, got {type(obj).__name__}")

"""Exact simplicial homology and the graded homological invariants of k[Δ].

Local cohomology and graded Betti numbers of a Stanley-Reisner ring are both
sums of reduced homology dimensions of small complexes: links of faces for
local cohomology, induced subcomplexes for Betti numbers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .complex import CapExceeded, SimplicialComplex, env_cap, lex_key, link_mask, maximal_masks, popcount, vertices_of
from .linalg import is_prime, rank


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field, identified by its characteristic (0 or a prime)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")


QQ = FieldSpec(0)


def _boundary_matrix(cols: Sequence[int], rows: Sequence[int]) -> np.ndarray:
    index = {g: r for r, g in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, face in enumerate(cols):
        for pos, v in enumerate(vertices_of(face)):
            mat[index[face & ~(1 << v)], c] = -1 if pos % 2 else 1
    return mat


def homology_of_faces(groups: Sequence[Sequence[int]], characteristic: int = 0) -> tuple[int, ...]:
    """dim H̃_i for i = -1..len(groups)-2 from faces grouped by dimension.

    ``groups[k]`` lists the faces of dimension k-1 (``groups[0]`` is [∅]).
    """
    groups = [list(g) for g in groups]
    while groups and not groups[-1]:
        groups.pop()
    ranks = [0] * (len(groups) + 1)
    for k in range(1, len(groups)):
        if groups[k] and groups[k - 1]:
            ranks[k] = rank(_boundary_matrix(groups[k], groups[k - 1]), characteristic)
    return tuple(len(groups[k]) - ranks[k] - ranks[k + 1] for k in range(len(groups)))


@lru_cache(maxsize=1 << 16)
def reduced_homology_dims(delta: SimplicialComplex, field: FieldSpec = QQ) -> tuple[int, ...]:
    """(dim H̃_{-1}, dim H̃_0, ..., dim H̃_{dim Δ}) over the given field."""
    hom = homology_of_faces(delta.faces_by_dim, field.characteristic)
    return hom + (0,) * (delta.dim + 2 - len(hom))


def euler_characteristic(f: Iterable[int]) -> int:
    """Reduced Euler characteristic -f_{-1} + f_0 - f_1 + ..."""
    return sum((-1) ** (i + 1) * fi for i, fi in enumerate(f))


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class BettiTable:
    """Sparse graded Betti numbers ``β_{i,j}`` (only nonzero entries stored)."""

    entries: tuple[tuple[int, int, int], ...]
    truncated: bool = False

    @classmethod
    def from_dict(cls, table: dict[tuple[int, int], int], truncated: bool = False) -> "BettiTable":
        return cls(tuple(sorted((i, j, b) for (i, j), b in table.items() if b)), truncated)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for i, j, b in self.entries}

    def get(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def row(self, i: int) -> dict[int, int]:
        return {j: b for ii, j, b in self.entries if ii == i}

    @property
    def is_polynomial_ring(self) -> bool:
        return not any(i >= 1 for i, _, _ in self.entries)

    @property
    def indeg(self) -> int:
        """Least j with β_{1,j} ≠ 0; 1 for a polynomial ring by convention."""
        degrees = [j for i, j, _ in self.entries if i == 1]
        return min(degrees) if degrees else 1

    @property
    def reg(self) -> int:
        return max(j - i for i, j, _ in self.entries)

    @property
    def pd(self) -> int:
        return max(i for i, _, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(b for ii, _, b in self.entries if ii == i)

    def is_linear(self) -> bool:
        """q-linear with q = indeg: every nonzero β_{i,j} (i ≥ 1) has j = i + q - 1."""
        q = self.indeg
        return all(j == i + q - 1 for i, j, _ in self.entries if i >= 1)

    def linear_degree(self) -> int | None:
        return self.indeg if self.reg == self.indeg - 1 else None


@dataclass(frozen=True)
class LocalCohomologyTable:
    """Graded dimensions of H^i_M(A), i = 0..d.

    ``rows[i]`` maps degree -> dimension for the nonzero degrees inside
    ``window`` (inclusive); ``None`` marks a row that was not computed.
    ``top_degrees[i]`` is the exact largest nonzero degree (``None`` for a
    zero or unknown row) and ``lengths[i]`` the total length for i < d
    (``None`` when infinite or unknown).  ``lengths[d]`` is always ``None``.
    """

    d: int
    window: tuple[int, int]
    rows: tuple[dict[int, int] | None, ...]
    top_degrees: tuple[int | None, ...]
    lengths: tuple[int | None, ...]

    @property
    def a_invariant(self) -> int | None:
        return self.top_degrees[self.d]

    def known(self, i: int) -> bool:
        return self.rows[i] is not None

    def dim(self, i: int, n: int) -> int:
        row = self.rows[i]
        if row is None:
            raise KeyError(f"row {i} was not computed")
        lo, hi = self.window
        if not lo <= n <= hi:
            raise KeyError(f"degree {n} lies outside the stored window {self.window}")
        return row.get(n, 0)

    def is_zero(self, i: int) -> bool:
        return self.known(i) and self.top_degrees[i] is None

    def all_known(self) -> bool:
        return all(r is not None for r in self.rows)

    def concentrated_in(self, i: int, n: int) -> bool:
        """H^i = [H^i]_n (a zero row counts)."""
        if self.is_zero(i):
            return True
        return self.lengths[i] is not None and set(self.rows[i]) == {n}

    def vanishes_from(self, i: int, n: int) -> bool:
        """[H^i]_m = 0 for every m ≥ n."""
        top = self.top_degrees[i]
        return top is None or top < n

    @property
    def regularity(self) -> int | None:
        """max{i + n : [H^i]_n ≠ 0}; ``None`` if some row is unknown."""
        if not self.all_known():
            return None
        vals = [i + t for i, t in enumerate(self.top_degrees) if t is not None]
        return max(vals) if vals else None

    @property
    def depth(self) -> int | None:
        for i in range(self.d + 1):
            if not self.known(i):
                return None
            if self.top_degrees[i] is not None:
                return i
        return None


def _link_homology_by_size(delta: SimplicialComplex, field: FieldSpec) -> dict[int, dict[int, int]]:
    """coeff[k][s] = Σ_{|F|=s} dim H̃_{k-1}(lk F), summed over faces F of Δ."""
    coeff: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for g in delta.faces:
        s = popcount(g)
        for k, dim_k in enumerate(reduced_homology_dims(link_mask(delta, g), field)):
            if dim_k:
                coeff[k][s] += dim_k
    return coeff


def local_cohomology_sr(delta: SimplicialComplex, field: FieldSpec = QQ,
                        window_low: int | None = None) -> LocalCohomologyTable:
    """Hochster's formula for the graded local cohomology of k[Δ].

    dim [H^i]_{-j} = Σ_{F≠∅} dim H̃_{i-|F|-1}(lk F) · C(j-1, |F|-1) for j ≥ 1 and
    [H^i]_0 = H̃_{i-1}(Δ).  Grouping faces by size gives an exact closed form
    for every degree, from which the window, lengths and top degrees follow.
    """
    d = delta.dim + 1
    coeff: list[dict[int, int]] = [defaultdict(int) for _ in range(d + 1)]
    for k, by_size in _link_homology_by_size(delta, field).items():
        for s, dim_k in by_size.items():
            i = k + s  # H̃_{k-1}(lk F) feeds H^{k-1+|F|+1}
            if i <= d:
                coeff[i][s] += dim_k
    lo = -(delta.num_vertices + 1) if window_low is None else window_low
    rows, tops, lengths = [], [], []
    for i in range(d + 1):
        c = coeff[i]
        row = {}
        if c.get(0):
            row[0] = c[0]
        for j in range(1, -lo + 1):
            val = sum(cs * comb(j - 1, s - 1) for s, cs in c.items() if s >= 1)
            if val:
                row[-j] = val
        rows.append(row)
        if c.get(0):
            tops.append(0)
        else:
            sizes = [s for s, cs in c.items() if s >= 1 and cs]
            tops.append(-min(sizes) if sizes else None)
        if i < d:
            infinite = any(cs for s, cs in c.items() if s >= 1)
            lengths.append(None if infinite else c.get(0, 0))
    lengths.append(None)
    return LocalCohomologyTable(d, (lo, 0), tuple(rows), tuple(tops), tuple(lengths))


def _components(parts: list[int]) -> list[list[int]]:
    """Group face masks into connected components (masks sharing a vertex)."""
    comps: list[tuple[int, list[int]]] = []
    for p in parts:
        joined, members, rest = p, [p], []
        for support, group in comps:
            if support & joined:
                joined |= support
                members += group
            else:
                rest.append((support, group))
        comps = rest + [(joined, members)]
    return [group for _, group in comps]


def _restriction_homology(delta: SimplicialComplex, w: int, field: FieldSpec, cache: dict) -> dict[int, int]:
    """Nonzero dim H̃_i(Δ_W), keyed by i."""
    parts = list(maximal_masks(f & w for f in delta.facets))
    if parts == [0]:
        return {-1: 1}  # only the empty face
    comps = _components(parts)
    out: dict[int, int] = defaultdict(int)
    if len(comps) > 1:
        out[0] = len(comps) - 1
    for group in comps:
        apex = group[0]
        for g in group[1:]:
            apex &= g
        if apex:
            continue  # a cone is acyclic
        support = 0
        for g in group:
            support |= g
        if support not in cache:
            groups: list[list[int]] = [[] for _ in range(popcount(support) + 1)]
            for face in delta.faces:
                if face & ~support == 0:
                    groups[popcount(face)].append(face)
            hom = homology_of_faces([sorted(grp, key=lex_key) for grp in groups], field.characteristic)
            cache[support] = {k - 1: x for k, x in enumerate(hom) if x and k >= 2}
        for i, x in cache[support].items():
            out[i] += x
    return out


def betti_table_sr(delta: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """β_{i,j}(k[Δ]) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ|_W) over the ``v``-variable ring.

    Restrictions are split into connected components; cones contribute nothing
    and the homology of every other component is computed once.
    """
    v = delta.num_vertices
    cap = env_cap("MINMULT_BETTI_CAP", 20)
    if v > cap:
        raise CapExceeded(f"Hochster Betti sum supports at most {cap} vertices, got {v}")
    cache: dict[int, dict[int, int]] = {}
    table: dict[tuple[int, int], int] = defaultdict(int)
    table[(0, 0)] = 1
    for w in range(1, 1 << v):
        j = popcount(w)
        for i, x in _restriction_homology(delta, w, field, cache).items():
            table[(j - i - 1, j)] += x
    return BettiTable.from_dict(table)


def betti_table_dual_sr(delta: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """Betti numbers of k[Δ*] from links in Δ.

    β_{i,j}(k[Δ*]) = Σ_{F∈Δ, |F|=v-j} dim H̃_{i-2}(lk_Δ F) for i ≥ 1, a sum over
    the faces of Δ instead of the 2^v restrictions of Δ*.
    """
    v = delta.num_vertices
    table: dict[tuple[int, int], int] = defaultdict(int)
    table[(0, 0)] = 1
    for k, by_size in _link_homology_by_size(delta, field).items():
        for s, x in by_size.items():
            table[(k + 1, v - s)] += x  # H̃_{k-1} = H̃_{i-2} gives i = k + 1
    return BettiTable.from_dict(table)

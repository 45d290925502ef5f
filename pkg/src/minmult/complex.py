"""Finite simplicial complexes stored as antichains of facet bitmasks.

Vertex ``i`` of the ground set ``{1..v}`` is bit ``i - 1`` of a face mask.
Public constructors take 1-based vertex lists; everything else works on masks.
"""

from __future__ import annotations

import itertools
import os
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import _backend

MAX_VERTICES = 63


class ComplexError(ValueError):
    """Invalid complex input (empty face list, bad vertex, unused vertex...)."""


class CapExceeded(ValueError):
    """A configurable size cap was exceeded."""


def env_cap(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def vertices_of(mask: int) -> tuple[int, ...]:
    """0-based vertex indices of a face mask, increasing."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for i in vertices:
        mask |= 1 << i
    return mask


def lex_key(mask: int) -> tuple[int, ...]:
    return vertices_of(mask)


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal elements, sorted lexicographically by vertex tuple."""
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lex_key))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``num_vertices`` vertices, given by its facets.

    ``labels`` records, for complexes derived by relabeling (links, induced
    subcomplexes), the original 1-based label of each vertex.  It does not
    take part in equality.
    """

    num_vertices: int
    facets: tuple[int, ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.facets:
            raise ComplexError("a complex needs at least one facet (use {∅} for the empty complex)")
        if not 0 <= self.num_vertices <= MAX_VERTICES:
            raise ComplexError(f"ground set size must be in 0..{MAX_VERTICES}")
        limit = 1 << self.num_vertices
        for f in self.facets:
            if f < 0 or f >= limit:
                raise ComplexError(f"facet {vertices_of(f)} leaves the ground set")
        for a, b in itertools.combinations(self.facets, 2):
            if a & ~b == 0 or b & ~a == 0:
                raise ComplexError("facets must form an antichain")

    @classmethod
    def from_masks(cls, num_vertices: int, masks: Iterable[int], labels=None) -> "SimplicialComplex":
        return cls(num_vertices, maximal_masks(masks), labels)

    @cached_property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) == 1

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(out)

    @cached_property
    def faces_by_dim(self) -> tuple[tuple[int, ...], ...]:
        """Faces grouped by dimension -1..dim, each group in lexicographic order."""
        groups: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for g in self.faces:
            groups[popcount(g)].append(g)
        return tuple(tuple(sorted(grp, key=lex_key)) for grp in groups)

    @cached_property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def ghost_vertices(self) -> tuple[int, ...]:
        """1-based vertices of the ground set that are not faces."""
        return tuple(i + 1 for i in range(self.num_vertices) if not self.vertex_mask >> i & 1)

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def facet_sets(self) -> list[tuple[int, ...]]:
        """Facets as sorted 1-based vertex tuples."""
        return [tuple(i + 1 for i in vertices_of(f)) for f in self.facets]

    def __repr__(self) -> str:
        body = ",".join("{" + "".join(map(str, s)) + "}" if self.num_vertices < 10 else str(s)
                        for s in self.facet_sets())
        return f"SimplicialComplex(v={self.num_vertices}, facets={body})"


def build_complex(v: int, face_list: Iterable[Iterable[int]], *, normalize: bool = False) -> SimplicialComplex:
    """Complex on ``{1..v}`` generated by ``face_list``.

    Every vertex must lie in some face.  With ``normalize=True`` unused vertices
    are relabeled away (with a warning) instead of rejected, which lowers ``v``.
    """
    faces = [tuple(f) for f in face_list]
    if not faces:
        raise ComplexError("empty face list")
    if v < 1 or v > MAX_VERTICES:
        raise ComplexError(f"vertex count must be in 1..{MAX_VERTICES}, got {v}")
    masks = []
    for face in faces:
        for x in face:
            if not isinstance(x, (int, np.integer)) or not 1 <= x <= v:
                raise ComplexError(f"face {list(face)}: vertex {x!r} out of range 1..{v}")
        masks.append(mask_of(x - 1 for x in face))
    used = 0
    for m in masks:
        used |= m
    unused = [i + 1 for i in range(v) if not used >> i & 1]
    if unused:
        if not normalize:
            raise ComplexError(f"vertices {unused} appear in no face")
        warnings.warn(f"dropping unused vertices {unused}; codimension changes", stacklevel=2)
        keep = [i for i in range(v) if used >> i & 1]
        return _relabel(masks, keep, labels=tuple(i + 1 for i in keep))
    return SimplicialComplex.from_masks(v, masks)


def _relabel(masks: Iterable[int], keep: list[int], labels: tuple[int, ...] | None) -> SimplicialComplex:
    """Restrict masks to the vertex positions in ``keep`` and renumber them 0..len-1."""
    pos = {old: new for new, old in enumerate(keep)}
    out = []
    for m in masks:
        out.append(mask_of(pos[i] for i in vertices_of(m)))
    return SimplicialComplex.from_masks(len(keep), out, labels)


def _original_labels(delta: SimplicialComplex, keep: list[int]) -> tuple[int, ...]:
    if delta.labels is None:
        return tuple(i + 1 for i in keep)
    return tuple(delta.labels[i] for i in keep)


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{d-1})."""
    return tuple(len(g) for g in delta.faces_by_dim)


def _h_by_formula(f: tuple[int, ...]) -> tuple[int, ...]:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)
    )


def _h_by_expansion(f: tuple[int, ...]) -> tuple[int, ...]:
    # sum_i f_{i-1} t^i (1-t)^{d-i}
    d = len(f) - 1
    out = [0] * (d + 1)
    for i, fi in enumerate(f):
        for k in range(d - i + 1):
            out[i + k] += fi * comb(d - i, k) * (-1) ** k
    return tuple(out)


def h_vector(f: tuple[int, ...]) -> tuple[int, ...]:
    """h-vector from an f-vector, cross-checked by polynomial expansion."""
    f = tuple(f)
    if not f or f[0] != 1:
        raise ValueError("f-vector must start with f_{-1} = 1")
    h = _h_by_formula(f)
    if h != _h_by_expansion(f):
        raise AssertionError(f"h-vector routes disagree for f={f}")
    return h


def link_mask(delta: SimplicialComplex, g: int) -> SimplicialComplex:
    """Link of the face ``g`` (a mask), relabeled onto the vertices it uses."""
    if not delta.is_face(g):
        raise ComplexError(f"{[i + 1 for i in vertices_of(g)]} is not a face")
    if g == 0:
        return delta
    parts = [f & ~g for f in delta.facets if f & g == g]
    support = 0
    for p in parts:
        support |= p
    keep = list(vertices_of(support))
    return _relabel(parts, keep, _original_labels(delta, keep))


def link(delta: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Link of a face given by 1-based vertices."""
    face = list(face)
    if any(not 1 <= x <= delta.num_vertices for x in face):
        raise ComplexError(f"{face} is not a face")
    return link_mask(delta, mask_of(x - 1 for x in face))


def induced_subcomplex(delta: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    """Faces of ``delta`` inside the 1-based vertex set ``w``, relabeled onto ``w``.

    The empty restriction is the complex {∅} on zero vertices.
    """
    w = sorted(set(w))
    if any(not 1 <= x <= delta.num_vertices for x in w):
        raise ComplexError(f"{w} is not a subset of the ground set")
    wmask = mask_of(x - 1 for x in w)
    keep = list(vertices_of(wmask))
    parts = [f & wmask for f in delta.facets]
    return _relabel(parts, keep, _original_labels(delta, keep))


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """{F ⊆ V : V \\ F ∉ Δ} on the same ground set; ghost vertices are kept."""
    v = delta.num_vertices
    full = (1 << v) - 1
    if delta.is_face(full):
        raise ComplexError("the full simplex has an empty Alexander dual")
    # complements of minimal nonfaces are exactly the facets of the dual
    return SimplicialComplex.from_masks(v, [full & ~m for m in minimal_nonface_masks(delta)])


def minimal_nonface_masks(delta: SimplicialComplex) -> tuple[int, ...]:
    v = delta.num_vertices
    faces = delta.faces
    out = set()
    for i in range(v):
        if not delta.vertex_mask >> i & 1:
            out.add(1 << i)
    for g in faces:
        top = g.bit_length()
        for i in range(top, v):
            s = g | (1 << i)
            if s in faces or not delta.vertex_mask >> i & 1:
                continue
            if all((s & ~(1 << j)) in faces for j in vertices_of(g)):
                out.add(s)
    return tuple(sorted(out, key=lambda m: (popcount(m), lex_key(m))))


def minimal_nonfaces(delta: SimplicialComplex) -> list[tuple[int, ...]]:
    """Inclusion-minimal non-faces as 1-based vertex tuples (size, then lex)."""
    return [tuple(i + 1 for i in vertices_of(m)) for m in minimal_nonface_masks(delta)]


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    shift = a.num_vertices
    return SimplicialComplex.from_masks(
        a.num_vertices + b.num_vertices, list(a.facets) + [f << shift for f in b.facets]
    )


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ((1 << n) - 1,))


def _gale_even(subset: tuple[int, ...], n: int) -> bool:
    """Every maximal run of consecutive elements avoiding 1 and n has even size."""
    runs: list[list[int]] = []
    for x in subset:
        if runs and runs[-1][-1] == x - 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    return all(len(r) % 2 == 0 for r in runs if r[0] != 1 and r[-1] != n)


def cyclic_polytope_boundary(n: int, f: int) -> SimplicialComplex:
    """Boundary complex of the cyclic polytope C(n, f) for even ``f``."""
    if f < 2 or f % 2 or n < f + 1:
        raise ValueError(f"need even f >= 2 and n >= f + 1, got n={n}, f={f}")
    facets = [s for s in itertools.combinations(range(1, n + 1), f) if _gale_even(s, n)]
    return build_complex(n, facets)


def _vertex_invariants(delta: SimplicialComplex) -> list[tuple]:
    out = []
    for i in range(delta.num_vertices):
        sizes = sorted(popcount(f) for f in delta.facets if f >> i & 1)
        out.append((len(sizes), tuple(sizes)))
    return out


def _permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def canonical_form(delta: SimplicialComplex, cap: int | None = None) -> tuple:
    """Least sorted facet-mask tuple over relabelings that respect vertex invariants.

    Two complexes get the same encoding iff they are isomorphic: the allowed
    relabelings send each invariant class to a fixed block of new labels, and
    that rule commutes with any isomorphism.
    """
    cap = env_cap("MINMULT_CANON_CAP", 9) if cap is None else cap
    v = delta.num_vertices
    if v > cap:
        raise CapExceeded(f"canonical_form supports at most {cap} vertices, got {v}")
    inv = _vertex_invariants(delta)
    order = sorted(range(v), key=lambda i: inv[i])
    blocks: list[list[int]] = []
    for i in order:
        if blocks and inv[blocks[-1][0]] == inv[i]:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    starts = []
    pos = 0
    for blk in blocks:
        starts.append(pos)
        pos += len(blk)
    best = None
    for choice in itertools.product(*(itertools.permutations(blk) for blk in blocks)):
        perm = [0] * v
        for start, arrangement in zip(starts, choice):
            for offset, old in enumerate(arrangement):
                perm[old] = start + offset
        enc = tuple(sorted(_permute_mask(f, perm) for f in delta.facets))
        if best is None or enc < best:
            best = enc
    return (v, best)


def from_canonical_form(enc: tuple) -> SimplicialComplex:
    v, facets = enc
    return SimplicialComplex.from_masks(v, facets)


def candidate_facets(n: int, dim: int) -> list[int]:
    """All (dim+1)-subsets of an n-set as masks, in lexicographic order."""
    return [mask_of(c) for c in itertools.combinations(range(n), dim + 1)]


def enumerate_pure_complexes(n: int, dim: int, dedup: bool = True) -> Iterator[SimplicialComplex]:
    """Pure complexes of dimension ``dim`` whose facets cover all ``n`` vertices.

    Facet sets are encoded as bitmasks over the lexicographic list of candidate
    facets and visited in increasing order.  With ``dedup`` only the least mask
    of each isomorphism orbit is produced, so the output is deterministic.
    """
    max_n = env_cap("MINMULT_ENUM_CAP", 7)
    max_candidates = env_cap("MINMULT_CANDIDATE_CAP", 24)
    if n > max_n:
        raise CapExceeded(f"enumeration supports at most {max_n} vertices, got {n}")
    if not 0 <= dim < n:
        raise ValueError(f"need 0 <= dim < n, got dim={dim}, n={n}")
    cands = candidate_facets(n, dim)
    m = len(cands)
    if m > max_candidates:
        raise CapExceeded(f"{m} candidate facets exceed the cap of {max_candidates}")
    cover = [sum(1 << j for j, c in enumerate(cands) if c >> v & 1) for v in range(n)]
    if dedup:
        index = {c: j for j, c in enumerate(cands)}
        images = np.array(
            [[index[_permute_mask(c, perm)] for c in cands] for perm in itertools.permutations(range(n))],
            dtype=np.int64,
        )
        masks: Iterable[int] = _backend.orbit_representatives(m, images, np.array(cover, dtype=np.int64))
    else:
        masks = (mk for mk in range(1, 1 << m) if all(mk & c for c in cover))
    for mk in masks:
        yield SimplicialComplex(n, tuple(sorted((cands[j] for j in range(m) if mk >> j & 1), key=lex_key)))


def _images(cands: list[int], perms: np.ndarray) -> np.ndarray:
    index = {c: j for j, c in enumerate(cands)}
    return np.array([[index[_permute_mask(c, tuple(p))] for c in cands] for p in perms], dtype=np.int64)


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every complex on ``n`` vertices (all of them used), one per isomorphism class.

    The complex is built one skeleton at a time.  At face size k the candidates
    are the k-sets whose boundary is already present; subsets of candidates are
    reduced to orbit representatives under the stabilizer of the skeleton
    chosen so far, which makes the output irredundant and deterministic.
    """
    max_n = env_cap("MINMULT_ALL_COMPLEXES_CAP", 6)
    if n > max_n:
        raise CapExceeded(f"full complex enumeration supports at most {max_n} vertices, got {n}")
    if n < 1:
        raise ValueError("need at least one vertex")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    no_cover = np.zeros(0, dtype=np.int64)

    def grow(faces: frozenset[int], size: int, group: np.ndarray) -> Iterator[SimplicialComplex]:
        cands = [c for c in candidate_facets(n, size - 1)
                 if all((c & ~(1 << i)) in faces for i in vertices_of(c))] if size <= n else []
        if not cands:
            yield SimplicialComplex.from_masks(n, faces)
            return
        images = _images(cands, group)
        yield SimplicialComplex.from_masks(n, faces)  # nothing of this size
        for rep in _backend.orbit_representatives(len(cands), images, no_cover):
            bits = [j for j in range(len(cands)) if rep >> j & 1]
            moved = (np.int64(1) << images[:, bits]).sum(axis=1)
            chosen = [cands[j] for j in bits]
            yield from grow(faces | frozenset(chosen), size + 1, group[moved == rep])

    yield from grow(frozenset([0] + [1 << i for i in range(n)]), 2, perms)

"""Census of small pure complexes: which (c, d, q, h) occur for Buchsbaum complexes
with a linear resolution, and which of them reach h = h_max.

The complexes come from :func:`enumerate_pure_complexes` (one per isomorphism
class).  Analysis can be spread over worker processes; results are merged in
enumeration order, so the output never depends on ``jobs``.
"""

from __future__ import annotations

import concurrent.futures as cf
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .complex import SimplicialComplex, canonical_form, enumerate_pure_complexes, from_canonical_form
from .homology import QQ, FieldSpec
from .invariants import InvariantReport, Verdict, analyze_sr, h_max

CHUNK = 64


@dataclass(frozen=True)
class ClassSummary:
    """The census-relevant part of one report, small enough to pass between processes."""

    n: int
    d: int
    c: int
    q: int
    e: int
    h: int | None
    h_max: Fraction | None
    buchsbaum: bool
    cohen_macaulay: bool
    linear: bool
    minimal_multiplicity: bool
    kamoi_vogel_equality_without_linear: bool
    canonical: tuple

    @property
    def key(self) -> tuple:
        return (self.n, self.d, self.c, self.q, self.e, self.h,
                self.buchsbaum, self.cohen_macaulay, self.linear, self.minimal_multiplicity)


@dataclass(frozen=True)
class CensusRow:
    n: int
    d: int
    c: int
    q: int
    e: int
    h: int | None
    h_max: Fraction | None
    buchsbaum: bool
    cohen_macaulay: bool
    linear: bool
    minimal_multiplicity: bool
    count: int
    witness: tuple
    classes: tuple[tuple, ...] = field(default=(), compare=False)

    @property
    def attains_h_max(self) -> bool:
        return self.h is not None and self.h_max is not None and self.h == self.h_max

    def witness_complex(self) -> SimplicialComplex:
        return from_canonical_form(self.witness)


def summarize(n: int, report: InvariantReport, delta: SimplicialComplex) -> ClassSummary:
    d, c, q = report.d, report.c, report.q
    linear = report.is_linear
    h = None
    if linear and 1 <= q - 1 < d and report.local_cohomology.lengths[q - 1] is not None:
        h = report.local_cohomology.lengths[q - 1]
    hm = h_max(c, d, q) if c >= 1 and 2 <= q <= d else None
    kv = report.check("kamoi_vogel")
    return ClassSummary(
        n=n, d=d, c=c, q=q, e=report.e, h=h, h_max=hm,
        buchsbaum=report.is_buchsbaum, cohen_macaulay=report.cohen_macaulay, linear=linear,
        minimal_multiplicity=report.minimal_multiplicity == "yes",
        kamoi_vogel_equality_without_linear=kv.verdict is Verdict.EQUALITY and not linear,
        canonical=canonical_form(delta),
    )


def _analyze_batch(args: tuple[int, int, tuple[tuple[int, ...], ...]]) -> list[ClassSummary]:
    n, char, batch = args
    field_ = FieldSpec(char)
    out = []
    for facets in batch:
        delta = SimplicialComplex(n, facets)
        out.append(summarize(n, analyze_sr(delta, field_), delta))
    return out


def _batches(n: int, dim: int) -> Iterable[tuple[tuple[int, ...], ...]]:
    batch: list[tuple[int, ...]] = []
    for delta in enumerate_pure_complexes(n, dim):
        batch.append(delta.facets)
        if len(batch) == CHUNK:
            yield tuple(batch)
            batch = []
    if batch:
        yield tuple(batch)


def class_summaries(n: int, dim: int, field: FieldSpec = QQ, jobs: int = 1) -> list[ClassSummary]:
    """One summary per isomorphism class, in enumeration order."""
    work = ((n, field.characteristic, b) for b in _batches(n, dim))
    if jobs <= 1:
        return [s for args in work for s in _analyze_batch(args)]
    pool = cf.ProcessPoolExecutor(max_workers=jobs)
    try:
        results = list(pool.map(_analyze_batch, work))
    except BaseException:
        pool.shutdown(wait=False, cancel_futures=True)
        raise
    pool.shutdown()
    return [s for chunk in results for s in chunk]


def aggregate(summaries: Sequence[ClassSummary], per_class: bool = False) -> list[CensusRow]:
    """Group classes by invariants; the witness is the first class met, rows sorted by key."""
    groups: dict[tuple, list[ClassSummary]] = {}
    for s in summaries:
        groups.setdefault(s.key, []).append(s)
    rows = []
    for key in sorted(groups, key=lambda k: tuple((x is None, x) for x in k)):
        members = groups[key]
        first = members[0]
        rows.append(CensusRow(
            n=first.n, d=first.d, c=first.c, q=first.q, e=first.e, h=first.h, h_max=first.h_max,
            buchsbaum=first.buchsbaum, cohen_macaulay=first.cohen_macaulay, linear=first.linear,
            minimal_multiplicity=first.minimal_multiplicity, count=len(members),
            witness=first.canonical,
            classes=tuple(m.canonical for m in members) if per_class else (),
        ))
    return rows


def census(n: int, dim: int, field: FieldSpec = QQ, *, q: int | None = None,
           require_minimal: bool = False, jobs: int = 1, per_class: bool = False) -> list[CensusRow]:
    """Aggregated census of pure ``dim``-dimensional complexes on ``n`` vertices."""
    summaries = class_summaries(n, dim, field, jobs)
    if q is not None:
        summaries = [s for s in summaries if s.q == q]
    if require_minimal:
        summaries = [s for s in summaries if s.minimal_multiplicity]
    return aggregate(summaries, per_class)


def hunt_kamoi_vogel_equality(n: int, dim: int | None = None, field: FieldSpec = QQ,
                              jobs: int = 1) -> list[SimplicialComplex]:
    """Buchsbaum classes reaching Kamoi-Vogel equality without a linear resolution.

    ``dim=None`` scans every dimension below ``n``.  Every hit is returned as
    a complex so that the caller can keep it.
    """
    dims = range(n) if dim is None else [dim]
    hits = []
    for dm in dims:
        for s in class_summaries(n, dm, field, jobs):
            if s.buchsbaum and s.kamoi_vogel_equality_without_linear:
                hits.append(from_canonical_form(s.canonical))
    return hits

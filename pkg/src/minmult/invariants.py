"""Invariant reports for k[Δ] and S/I, and the theorem checks run against them.

Every check returns a :class:`CheckResult` whose evidence recomputes its verdict.
Checks come in two kinds.  A *bound* check fails when a proven inequality or
implication is violated.  An *equivalence* check evaluates several conditions
that must agree; its verdict is their common value, and disagreement raises
:class:`EquivalenceViolation` with a dump of the input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from . import monomial as mono
from .complex import (
    SimplicialComplex,
    _relabel,
    alexander_dual,
    env_cap,
    f_vector,
    h_vector,
    link_mask,
    minimal_nonface_masks,
    popcount,
    vertices_of,
)
from .homology import (
    QQ,
    BettiTable,
    FieldSpec,
    LocalCohomologyTable,
    betti_table_dual_sr,
    betti_table_sr,
    local_cohomology_sr,
    reduced_homology_dims,
)
from .monomial import HilbertSeries, MonomialIdeal


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    EQUALITY = "equality"
    NOT_APPLICABLE = "not-applicable"
    UNKNOWN = "unknown"


class EquivalenceViolation(RuntimeError):
    """Conditions proven equivalent disagreed on a concrete input."""

    def __init__(self, message: str, dump: dict):
        super().__init__(message)
        self.dump = dump


class InternalError(RuntimeError):
    """Two independent computations of the same invariant disagreed."""


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, 0) = 1 and 0 whenever b < 0 or b > a."""
    if b == 0:
        return 1
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: Verdict
    evidence: tuple[tuple[str, object], ...] = ()
    kind: str = "bound"
    note: str = ""

    @property
    def violated(self) -> bool:
        return self.kind == "bound" and self.verdict is Verdict.FAILS

    def get(self, key: str, default=None):
        return dict(self.evidence).get(key, default)


def _result(name, verdict, evidence: dict, kind="bound", note="") -> CheckResult:
    return CheckResult(name, verdict, tuple(evidence.items()), kind, note)


def _na(name: str, why: str, kind: str = "bound", **evidence) -> CheckResult:
    return _result(name, Verdict.NOT_APPLICABLE, {"reason": why, **evidence}, kind, why)


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one ring, plus the verdicts of the checks run on it.

    ``v`` counts the variables of the presentation actually analysed: ghost
    vertices and variables that are themselves generators are removed first
    (listed in ``stripped``, 1-based), so that ``q = indeg`` is at least 2
    unless the ring is a polynomial ring.
    """

    source: str
    characteristic: int
    v: int
    d: int
    c: int
    q: int
    e: int
    depth: int
    reg: int
    pd: int
    a_invariant: int | None
    hilbert: HilbertSeries
    betti: BettiTable
    local_cohomology: LocalCohomologyTable
    I_invariant: int | None
    cohen_macaulay: bool
    buchsbaum: str
    buchsbaum_reason: str
    linear_resolution_degree: int | None
    minimal_multiplicity: str
    polynomial_ring: bool
    ideal: MonomialIdeal
    complex: SimplicialComplex | None = None
    f_vector: tuple[int, ...] | None = None
    h_vector: tuple[int, ...] | None = None
    quotient_cm: bool | None = None
    quotient_betti: BettiTable | None = None
    saturation: MonomialIdeal | None = None
    stripped: tuple[int, ...] = ()
    checks: tuple[CheckResult, ...] = ()
    provenance: tuple[str, ...] = ()

    @property
    def h_lengths(self) -> tuple[int | None, ...]:
        return self.local_cohomology.lengths[: self.d]

    @property
    def all_h_known(self) -> bool:
        return all(x is not None for x in self.h_lengths)

    @property
    def is_buchsbaum(self) -> bool:
        return self.buchsbaum == "yes"

    @property
    def is_linear(self) -> bool:
        return self.linear_resolution_degree is not None

    @property
    def minimal_multiplicity_degree(self) -> int | None:
        if self.minimal_multiplicity != "yes":
            return None
        return 1 if self.polynomial_ring else self.q

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def describe(self) -> dict:
        """Compact descriptor of the input, used in violation dumps."""
        out: dict = {"source": self.source, "characteristic": self.characteristic}
        if self.complex is not None:
            out["vertices"] = self.complex.num_vertices
            out["facets"] = [list(s) for s in self.complex.facet_sets()]
        out["variables"] = self.ideal.nvars
        out["generators"] = [list(g) for g in self.ideal.gens]
        return out


# ---------------------------------------------------------------------------
# shared formulas


def h_max(c: int, d: int, q: int) -> Fraction:
    """c(c+1)...(c+q-2) / (d(d-1)...(d-q+2))."""
    if c < 1 or not 2 <= q <= d:
        raise ValueError(f"need c >= 1 and 2 <= q <= d, got c={c}, d={d}, q={q}")
    return Fraction(prod(c + k for k in range(q - 1)), prod(d - k for k in range(q - 1)))


def linear_h_vector(c: int, d: int, q: int, h) -> tuple:
    """h-vector forced by a q-linear resolution with dim H^{q-1} = h."""
    head = [binom(c + i - 1, i) for i in range(q)]
    tail = [(-1) ** (i - q + 1) * binom(d, i) * h for i in range(q, d + 1)]
    return tuple(head + tail)


def predicted_hilbert_series(c: int, d: int, q: int, h: Sequence[int]) -> HilbertSeries:
    """Hilbert series forced by minimal multiplicity of degree q, from h^0..h^{d-1}."""
    if d < 2:
        raise ValueError("the closed form needs d >= 2")
    hs = list(h) + [0] * (d - len(h))
    num = [binom(c + i - 1, i) for i in range(q)]
    for i in range(q, q + d):
        inner = sum(binom(d, i + j - q + 1) * hs[j] for j in range(q + d - i) if j < d)
        num.append((-1) ** (i + q - 1) * inner)
    return HilbertSeries(mono._trim(num), d)


def _lower_bound_rhs(c: int, d: int, q: int, h: Sequence[int]) -> int:
    return binom(c + q - 2, q - 2) + sum(binom(d - 1, i - 1) * h[i] for i in range(1, d))


def _kv_sides(r: InvariantReport) -> tuple[int, int]:
    lhs = sum(binom(r.d, i) * h for i, h in enumerate(r.h_lengths))
    return lhs, binom(r.reg + r.c - 1, r.c - 1)


def _standard_setting(r: InvariantReport) -> str | None:
    """Reason the standing hypotheses d >= 1, c >= 1, q >= 2 fail, if they do."""
    if r.d < 1:
        return "d = 0"
    if r.c < 1:
        return "c = 0 (polynomial ring)"
    if r.q < 2:
        return "q < 2"
    return None


def _violation(name: str, r: InvariantReport, conditions: dict, evidence: dict):
    raise EquivalenceViolation(
        f"{name}: conditions disagree {conditions}",
        {"check": name, "input": r.describe(), "conditions": conditions,
         "evidence": {k: str(v) for k, v in evidence.items()}},
    )


def _equivalence(name: str, r: InvariantReport, conditions: dict, evidence: dict, note="") -> CheckResult:
    values = set(conditions.values())
    if len(values) > 1:
        _violation(name, r, conditions, evidence)
    verdict = Verdict.HOLDS if values == {True} else Verdict.FAILS
    return _result(name, verdict, {**{f"condition_{k}": v for k, v in conditions.items()}, **evidence},
                   "equivalence", note)


# ---------------------------------------------------------------------------
# checks on a report


def check_lower_bound(r: InvariantReport) -> CheckResult:
    """e >= C(c+q-2, q-2) + Σ_{i=1}^{d-1} C(d-1, i-1) h^i, equality flagged.

    Outside the Buchsbaum setting the two sides are still reported when they
    can be evaluated, so a failure of the bound is visible as evidence.
    """
    name = "lower_bound"
    why = _standard_setting(r)
    if why is not None:
        return _na(name, why)
    if not r.all_h_known:
        return _na(name, "some h^i unknown")
    rhs = _lower_bound_rhs(r.c, r.d, r.q, r.h_lengths)
    evidence = {"e": r.e, "rhs": rhs}
    if not r.is_buchsbaum:
        relation = "<" if r.e < rhs else ("=" if r.e == rhs else ">")
        return _na(name, f"not Buchsbaum; informational e {relation} rhs", e=r.e, rhs=rhs, relation=relation)
    # the bound is strict for every smaller degree 2 <= q' < q
    smaller = [(qq, _lower_bound_rhs(r.c, r.d, qq, r.h_lengths)) for qq in range(2, r.q)]
    strict = all(r.e > s for _, s in smaller)
    evidence["strict_below_q"] = strict
    if r.e < rhs or not strict:
        return _result(name, Verdict.FAILS, evidence)
    return _result(name, Verdict.EQUALITY if r.e == rhs else Verdict.HOLDS, evidence)


def check_main_equivalences(r: InvariantReport) -> CheckResult:
    """Four characterizations of minimal multiplicity, which must agree."""
    name = "main_equivalences"
    why = _standard_setting(r)
    if why is not None:
        return _na(name, why, "equivalence")
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum", "equivalence")
    lc = r.local_cohomology
    if not lc.all_known() or r.a_invariant is None:
        return _na(name, "local cohomology not fully known", "equivalence")
    d, q, c = r.d, r.q, r.c
    rhs = _lower_bound_rhs(c, d, q, r.h_lengths)
    kv_lhs, kv_rhs = _kv_sides(r)
    q_linear = r.betti.indeg == q and r.reg == q - 1
    conditions = {
        1: r.e == rhs,
        2: r.a_invariant == q - d - 2,
        3: all(lc.concentrated_in(i, q - 1 - i) for i in range(d)) and lc.vanishes_from(d, q - d - 1),
        4: q_linear and kv_lhs == kv_rhs,
    }
    evidence = {"e": r.e, "bound": rhs, "a": r.a_invariant, "q-d-2": q - d - 2,
                "q_linear": q_linear, "kv_lhs": kv_lhs, "kv_rhs": kv_rhs, "reg": r.reg}
    result = _equivalence(name, r, conditions, evidence)
    if result.verdict is Verdict.HOLDS and r.reg != q - 1:
        _violation(name + " (reg = q-1)", r, {**conditions, "reg=q-1": False}, evidence)
    return result


def check_hoa_miyazaki(r: InvariantReport) -> CheckResult:
    """reg - a - d ∈ {0, 1}; the +1 case is forced under minimal multiplicity."""
    name = "hoa_miyazaki"
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum")
    if r.a_invariant is None:
        return _na(name, "a-invariant unknown")
    gap = r.reg - r.a_invariant - r.d
    evidence = {"reg": r.reg, "a": r.a_invariant, "d": r.d, "gap": gap}
    ok = gap in (0, 1)
    if r.minimal_multiplicity == "yes" and r.q >= 2 and gap != 1:
        ok = False
    return _result(name, Verdict.HOLDS if ok else Verdict.FAILS, evidence, note=f"+{gap} case")


def check_a_invariant_bound(r: InvariantReport) -> CheckResult:
    """a >= q - d - 2 for Buchsbaum rings."""
    name = "a_invariant_bound"
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum")
    if r.a_invariant is None:
        return _na(name, "a-invariant unknown")
    lo = r.q - r.d - 2
    verdict = Verdict.FAILS if r.a_invariant < lo else (
        Verdict.EQUALITY if r.a_invariant == lo else Verdict.HOLDS)
    return _result(name, verdict, {"a": r.a_invariant, "q-d-2": lo})


def check_kamoi_vogel(r: InvariantReport) -> CheckResult:
    """Σ_{i<d} C(d,i) h^i <= C(reg+c-1, c-1), attained under minimal multiplicity."""
    name = "kamoi_vogel"
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum")
    if not r.all_h_known:
        return _na(name, "some h^i unknown")
    lhs, rhs = _kv_sides(r)
    evidence = {"lhs": lhs, "rhs": rhs, "linear": r.is_linear}
    if lhs > rhs or (r.minimal_multiplicity == "yes" and r.q >= 2 and lhs != rhs):
        return _result(name, Verdict.FAILS, evidence)
    note = ""
    if lhs == rhs and not r.is_linear:
        note = "equality without linear resolution"
    return _result(name, Verdict.EQUALITY if lhs == rhs else Verdict.HOLDS, evidence, note=note)


def check_linearity_criterion(r: InvariantReport) -> CheckResult:
    """q-linear resolution iff H^i = [H^i]_{q-1-i} (i < d) and [H^d]_n = 0 for n >= q-d."""
    name = "linearity_criterion"
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum", "equivalence")
    lc = r.local_cohomology
    if not lc.all_known():
        return _na(name, "local cohomology not fully known", "equivalence")
    d, q = r.d, r.q
    conditions = {
        1: r.betti.indeg == q and r.reg == q - 1,
        2: all(lc.concentrated_in(i, q - 1 - i) for i in range(d)) and lc.vanishes_from(d, q - d),
    }
    return _equivalence(name, r, conditions, {"reg": r.reg, "q": q, "a": r.a_invariant})


def check_cm_bound(r: InvariantReport) -> CheckResult:
    """For Cohen-Macaulay rings: e >= C(c+q-1, q-1), a = reg - d >= q-d-1, and the equality cases agree."""
    name = "cm_bound"
    if not r.cohen_macaulay:
        return _na(name, "not Cohen-Macaulay")
    why = _standard_setting(r)
    if why is not None:
        return _na(name, why)
    bound = binom(r.c + r.q - 1, r.q - 1)
    a = r.a_invariant
    conditions = {"a": r.e == bound, "b": a == r.q - r.d - 1,
                  "c": r.betti.indeg == r.q and r.reg == r.q - 1}
    evidence = {"e": r.e, "bound": bound, "a": a, "reg-d": r.reg - r.d, "q-d-1": r.q - r.d - 1}
    if len(set(conditions.values())) > 1:
        _violation(name, r, conditions, evidence)
    evidence["equality_cases"] = conditions["a"]
    if r.e < bound or a != r.reg - r.d or a < r.q - r.d - 1:
        return _result(name, Verdict.FAILS, evidence)
    return _result(name, Verdict.EQUALITY if r.e == bound else Verdict.HOLDS, evidence)


def check_not_cohen_macaulay(r: InvariantReport) -> CheckResult:
    """Minimal multiplicity with Cohen-Macaulay forces a polynomial ring (q = 1)."""
    name = "not_cohen_macaulay"
    if not r.is_buchsbaum or r.minimal_multiplicity != "yes":
        return _na(name, "needs a Buchsbaum ring with minimal multiplicity")
    ok = r.cohen_macaulay == (r.polynomial_ring and r.q == 1)
    return _result(name, Verdict.HOLDS if ok else Verdict.FAILS,
                   {"cohen_macaulay": r.cohen_macaulay, "polynomial_ring": r.polynomial_ring, "q": r.q})


def check_hyperplane_section(r: InvariantReport, field: FieldSpec = QQ) -> CheckResult:
    """Cutting by a variable that is a non-zero-divisor.

    A variable is a non-zero-divisor on a monomial quotient exactly when it
    appears in no generator; the section is then the same ideal in one
    variable fewer.  Expected: the section is Buchsbaum with q-linear
    resolution, and has minimal multiplicity iff H^{d-1}(A) = 0.
    """
    name = "hyperplane_section"
    if r.minimal_multiplicity != "yes" or r.q < 2 or r.d < 2:
        return _na(name, "needs minimal multiplicity with q >= 2, d >= 2")
    ideal = r.ideal
    free = [k for k in range(ideal.nvars) if all(g[k] == 0 for g in ideal.gens)]
    if not free:
        return _na(name, "no variable is a non-zero-divisor")
    k = free[0]
    section = MonomialIdeal(ideal.nvars - 1, tuple(g[:k] + g[k + 1:] for g in ideal.gens))
    s = analyze_monomial(section, field, checks=False)
    linear = s.is_buchsbaum and s.betti.indeg == r.q and s.reg == r.q - 1
    top = r.h_lengths[r.d - 1]
    conditions = {"section_mm": s.minimal_multiplicity == "yes", "h^{d-1}=0": top == 0}
    ok = linear and len(set(conditions.values())) == 1
    return _result(name, Verdict.HOLDS if ok else Verdict.FAILS,
                   {"variable": k + 1, "section_linear": linear, **conditions})


def check_wcm(r: InvariantReport) -> CheckResult:
    """When A/H^0 is Cohen-Macaulay, four descriptions of minimal multiplicity agree."""
    name = "wcm_criterion"
    why = _standard_setting(r)
    if why is not None:
        return _na(name, why, "equivalence")
    if not r.is_buchsbaum or not r.quotient_cm:
        return _na(name, "needs Buchsbaum with A/H^0 Cohen-Macaulay", "equivalence")
    lc = r.local_cohomology
    if not lc.all_known():
        return _na(name, "local cohomology not fully known", "equivalence")
    c, d, q = r.c, r.d, r.q
    h0 = r.h_lengths[0]
    qb = r.quotient_betti
    conditions = {
        1: r.e == binom(c + q - 2, q - 2),
        2: r.betti.indeg == q and r.reg == q - 1 and h0 == binom(c + q - 2, q - 1),
        3: lc.concentrated_in(0, q - 1) and all(lc.is_zero(i) for i in range(1, d))
        and lc.vanishes_from(d, q - d - 1),
        4: qb is not None and qb.indeg == q - 1 and qb.reg == q - 2,
    }
    return _equivalence(name, r, conditions, {"e": r.e, "h0": h0, "reg": r.reg,
                                              "quotient_reg": None if qb is None else qb.reg})


def _is_f_times_irrelevant(r: InvariantReport) -> bool:
    sat = r.saturation
    if sat is None or len(sat.gens) != 1:
        return False
    return mono.multiply_by_irrelevant(sat) == r.ideal


def _quotient_is_polynomial(r: InvariantReport) -> bool:
    sat = r.saturation
    return sat is not None and all(sum(g) == 1 for g in sat.gens)


def check_small_multiplicity(r: InvariantReport) -> CheckResult:
    """q <= e+1 always; the case q = e+1 and the rings with e <= 2.

    For non-Cohen-Macaulay rings with d >= 2 and e >= 2: q = e+1 iff I = f·𝔑 iff
    minimal multiplicity of degree e+1, and then c = 1 and h^i = 0 for 0 < i < d.
    At e = 1 only the first equivalence with minimal multiplicity is kept.
    With e <= 2 the ring has minimal multiplicity of degree at most 3 and falls
    in one of the listed cases.
    """
    name = "small_multiplicity"
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum")
    evidence: dict = {"q": r.q, "e": r.e}
    ok = r.q <= r.e + 1
    if r.cohen_macaulay or r.d < 2 or _standard_setting(r) is not None:
        evidence["scope"] = "q <= e+1 only"
        return _result(name, Verdict.HOLDS if ok else Verdict.FAILS, evidence)
    mm = r.minimal_multiplicity == "yes"
    top = {"a": r.q == r.e + 1, "b": _is_f_times_irrelevant(r), "c": mm and r.q == r.e + 1}
    evidence["q=e+1"] = top["a"]
    if r.e >= 2:
        if len(set(top.values())) > 1:
            _violation(name, r, top, evidence)
        if top["a"]:
            ok = ok and r.c == 1 and all(h == 0 for h in r.h_lengths[1:])
    else:
        # at e = 1 the ring is 𝔑·(linear forms) and c may exceed 1
        evidence["f_times_irrelevant"] = top["b"]
    if r.e <= 2:
        h1 = r.h_lengths[1]
        cases = []
        if r.e == 1:
            if r.q == 2 and r.depth == 0 and _quotient_is_polynomial(r):
                cases.append("e=1")
        else:
            if r.q == 2 and r.depth > 0 and r.c == r.d and h1 == 1:
                cases.append("2a")
            if r.q == 2 and r.depth == 0 and h1 == 1:
                cases.append("2b")
            if r.q == 3 and r.depth == 0 and r.c == 1 and r.quotient_cm:
                cases.append("2c")
        evidence["case"] = ",".join(cases) or "none"
        ok = ok and mm and r.q <= 3 and len(cases) == 1
    return _result(name, Verdict.HOLDS if ok else Verdict.FAILS, evidence)


def check_hilbert_formula(r: InvariantReport, upto: int = 24) -> CheckResult:
    """The Hilbert series predicted by minimal multiplicity equals the computed one."""
    name = "hilbert_formula"
    if r.minimal_multiplicity != "yes" or not r.is_buchsbaum or _standard_setting(r) is not None:
        return _na(name, "needs minimal multiplicity with c >= 1, q >= 2")
    if r.d < 2:
        return _na(name, "needs d >= 2")
    pred = predicted_hilbert_series(r.c, r.d, r.q, r.h_lengths)
    same = pred.coefficients(upto) == r.hilbert.coefficients(upto) and pred == r.hilbert
    return _result(name, Verdict.HOLDS if same else Verdict.FAILS,
                   {"predicted": pred.reduced[0], "computed": r.hilbert.reduced[0], "degrees_compared": upto})


# ---------------------------------------------------------------------------
# Stanley-Reisner specific checks


def _sr_setting(r: InvariantReport, name: str) -> CheckResult | None:
    if r.complex is None:
        return _na(name, "not a Stanley-Reisner ring", "equivalence")
    if not r.is_buchsbaum:
        return _na(name, "not Buchsbaum", "equivalence")
    if not 2 <= r.q <= r.d:
        return _na(name, "needs 2 <= q <= d", "equivalence")
    return None


def check_linear_sr(r: InvariantReport) -> CheckResult:
    """q-linear resolution, the h-vector pattern, and the (e, I) formulas agree."""
    name = "linear_sr"
    skip = _sr_setting(r, name)
    if skip is not None:
        return skip
    c, d, q = r.c, r.d, r.q
    h = r.local_cohomology.lengths[q - 1]
    conditions = {
        1: r.betti.indeg == q and r.reg == q - 1,
        2: r.h_vector == linear_h_vector(c, d, q, h),
        3: r.e == binom(c + q - 1, q - 1) - h * binom(d - 1, q - 1) and r.I_invariant == h * binom(d - 1, q - 1),
    }
    evidence = {"h": h, "h_vector": r.h_vector, "e": r.e, "I": r.I_invariant}
    result = _equivalence(name, r, conditions, evidence)
    if result.verdict is Verdict.HOLDS:
        hm = h_max(c, d, q)
        extra = {"0<=h<=h_max": 0 <= h <= hm,
                 "H^i=0 off q-1": all(r.h_lengths[i] == 0 for i in range(d) if i != q - 1)}
        if not all(extra.values()):
            _violation(name, r, {**conditions, **extra}, evidence)
    return result


def _links_linear(delta: SimplicialComplex, degree: int, field: FieldSpec) -> bool:
    for i in range(delta.num_vertices):
        lk = link_mask(delta, 1 << i)
        b = betti_table_sr(lk, field)
        if not (b.indeg == degree and b.reg == degree - 1):
            return False
    return True


def _dual_top_homology_nonzero(delta: SimplicialComplex, q: int, field: FieldSpec) -> bool:
    """Whether a(k[Δ*]) = 0, read off Δ through Alexander duality.

    a(k[Δ*]) = 0 iff H̃_{d*-1}(Δ*) ≠ 0 with d* = v - q, and that group is dual
    to H̃_{q-2}(Δ).
    """
    hom = reduced_homology_dims(delta, field)
    return q - 1 < len(hom) and hom[q - 1] > 0


def _dual_pure_almost_linear(r: InvariantReport, hm: Fraction, field: FieldSpec) -> tuple[bool, dict]:
    delta = r.complex
    b = betti_table_dual_sr(delta, field)
    a_zero = _dual_top_homology_nonzero(delta, r.q, field)
    if delta.num_vertices <= env_cap("MINMULT_DUAL_DIRECT_CAP", 10):
        dual = alexander_dual(delta)
        direct = betti_table_sr(dual, field)
        direct_a = local_cohomology_sr(dual, field).a_invariant
        if direct.as_dict() != b.as_dict() or (direct_a == 0) != a_zero:
            raise InternalError("dual Betti numbers disagree between the link and restriction formulas")
    c, d, q = r.c, r.d, r.q
    rows_ok = all(set(b.row(i)) == {c + i - 1} for i in range(1, q))
    last = b.row(q)
    last_ok = set(last) == {c + d} and last[c + d] == hm
    pd_ok = b.pd == q
    ok = rows_ok and last_ok and pd_ok and a_zero
    return ok, {"dual_betti": b.entries, "dual_a_zero": a_zero}


def check_srmm(r: InvariantReport, field: FieldSpec | None = None) -> CheckResult:
    """e >= (c+d)/d·C(c+q-2, q-2) and six equivalent forms of equality."""
    name = "srmm"
    skip = _sr_setting(r, name)
    if skip is not None:
        return skip
    field = field or FieldSpec(r.characteristic)
    c, d, q = r.c, r.d, r.q
    bound = Fraction(c + d, d) * binom(c + q - 2, q - 2)
    hm = h_max(c, d, q)
    h = r.local_cohomology.lengths[q - 1]
    q_linear = r.betti.indeg == q and r.reg == q - 1
    dual_ok, dual_evidence = _dual_pure_almost_linear(r, hm, field)
    conditions = {
        1: r.e == bound,
        2: r.e == _lower_bound_rhs(c, d, q, r.h_lengths),
        3: q_linear and h == hm,
        4: _links_linear(r.complex, q - 1, field),
        5: hm.denominator == 1 and r.h_vector == linear_h_vector(c, d, q, int(hm)),
        6: dual_ok,
    }
    evidence = {"e": r.e, "bound": bound, "h": h, "h_max": hm, **dual_evidence}
    result = _equivalence(name, r, conditions, evidence)
    if r.e < bound:
        return replace(result, verdict=Verdict.FAILS, kind="bound", note="multiplicity bound violated")
    return result


# ---------------------------------------------------------------------------
# Stanley-Reisner analysis


def is_cohen_macaulay_sr(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Reisner: every link (∅ included) has vanishing homology below its dimension."""
    for g in sorted(delta.faces):
        lk = link_mask(delta, g)
        hom = reduced_homology_dims(lk, field)
        if any(hom[: lk.dim + 1]):  # indices -1 .. dim-1
            return False
    return True


def is_buchsbaum_sr(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Pure with Cohen-Macaulay vertex links.

    A positive answer is cross-checked against local cohomology: below the top
    index every module must sit in degree 0 with the homology of Δ.
    """
    if not delta.is_pure:
        return False
    for i in range(delta.num_vertices):
        if delta.vertex_mask >> i & 1 and not is_cohen_macaulay_sr(link_mask(delta, 1 << i), field):
            return False
    lc = local_cohomology_sr(delta, field)
    hom = reduced_homology_dims(delta, field)
    for i in range(lc.d):
        expected = {0: hom[i]} if hom[i] else {}
        if lc.rows[i] != expected or lc.lengths[i] != hom[i]:
            raise InternalError(f"Buchsbaum complex with H^{i} = {lc.rows[i]}, expected {expected}")
    return True


def _strip_ghosts(delta: SimplicialComplex) -> tuple[SimplicialComplex, tuple[int, ...]]:
    ghosts = delta.ghost_vertices
    if not ghosts:
        return delta, ()
    keep = list(vertices_of(delta.vertex_mask))
    return _relabel(delta.facets, keep, tuple(i + 1 for i in keep)), ghosts


def _betti_series(betti: BettiTable) -> tuple[int, ...]:
    out = [0] * (max(j for _, j, _ in betti.entries) + 1)
    for i, j, b in betti.entries:
        out[j] += (-1) ** i * b
    return mono._trim(out)


def _sr_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    return mono.complex_to_ideal(delta)


def analyze_sr(delta: SimplicialComplex, field: FieldSpec = QQ, *, checks: bool = True,
               source: str = "complex", provenance: Sequence[str] = ()) -> InvariantReport:
    """Full report for k[Δ]; reg and depth are computed two ways and must agree."""
    delta, stripped = _strip_ghosts(delta)
    v = delta.num_vertices
    d = delta.dim + 1
    f = f_vector(delta)
    h = h_vector(f)
    e = f[-1]
    nonfaces = minimal_nonface_masks(delta)
    q = min((popcount(m) for m in nonfaces), default=1)
    betti = betti_table_sr(delta, field)
    lc = local_cohomology_sr(delta, field)
    depth = v - betti.pd
    if lc.regularity != betti.reg:
        raise InternalError(f"reg from Betti numbers {betti.reg} != reg from local cohomology {lc.regularity}")
    if lc.depth != depth:
        raise InternalError(f"depth v - pd = {depth} != depth from local cohomology {lc.depth}")
    if betti.indeg != q:
        raise InternalError(f"indeg from Betti numbers {betti.indeg} != smallest nonface {q}")
    hilbert = HilbertSeries(h, d)
    if _betti_series(betti) != mono._trim(list(mono.poly_mul(h, _one_minus_t_power(v - d)))):
        raise InternalError("Betti numbers do not reproduce the Hilbert series")
    cm = is_cohen_macaulay_sr(delta, field)
    if cm != (depth == d):
        raise InternalError("Reisner criterion disagrees with depth")
    bbm = is_buchsbaum_sr(delta, field)
    polynomial = not nonfaces
    ideal = _sr_ideal(delta)
    report = InvariantReport(
        source=source, characteristic=field.characteristic, v=v, d=d, c=v - d, q=q, e=e,
        depth=depth, reg=betti.reg, pd=betti.pd, a_invariant=lc.a_invariant, hilbert=hilbert,
        betti=betti, local_cohomology=lc, I_invariant=_buchsbaum_invariant(lc, d),
        cohen_macaulay=cm, buchsbaum="yes" if bbm else "no",
        buchsbaum_reason="pure with Cohen-Macaulay vertex links" if bbm else (
            "not pure" if not delta.is_pure else "some vertex link is not Cohen-Macaulay"),
        linear_resolution_degree=q if betti.reg == q - 1 else None,
        minimal_multiplicity="no", polynomial_ring=polynomial, ideal=ideal, complex=delta,
        f_vector=f, h_vector=h, quotient_cm=cm, quotient_betti=betti, saturation=ideal,
        stripped=stripped, provenance=tuple(provenance),
    )
    return _finish(report, field, checks)


def _one_minus_t_power(k: int) -> tuple[int, ...]:
    return tuple((-1) ** i * comb(k, i) for i in range(k + 1))


def _buchsbaum_invariant(lc: LocalCohomologyTable, d: int) -> int | None:
    lengths = lc.lengths[:d]
    if any(x is None for x in lengths):
        return None
    return sum(binom(d - 1, i) * x for i, x in enumerate(lengths))


def _minimal_multiplicity(r: InvariantReport) -> str:
    if r.buchsbaum == "unknown":
        return "unknown"
    if r.buchsbaum == "no":
        return "no"
    if r.polynomial_ring:
        return "yes"
    if _standard_setting(r) is not None:
        return "no"
    if not r.all_h_known:
        return "unknown"
    return "yes" if r.e == _lower_bound_rhs(r.c, r.d, r.q, r.h_lengths) else "no"


def run_checks(r: InvariantReport, field: FieldSpec | None = None) -> tuple[CheckResult, ...]:
    field = field or FieldSpec(r.characteristic)
    return (
        check_lower_bound(r),
        check_main_equivalences(r),
        check_hoa_miyazaki(r),
        check_a_invariant_bound(r),
        check_kamoi_vogel(r),
        check_linearity_criterion(r),
        check_cm_bound(r),
        check_not_cohen_macaulay(r),
        check_hyperplane_section(r, field),
        check_wcm(r),
        check_small_multiplicity(r),
        check_hilbert_formula(r),
        check_linear_sr(r),
        check_srmm(r, field),
    )


def _finish(r: InvariantReport, field: FieldSpec, checks: bool) -> InvariantReport:
    if r.is_buchsbaum and r.I_invariant is not None and r.cohen_macaulay != (r.I_invariant == 0):
        raise InternalError(f"Cohen-Macaulay flag {r.cohen_macaulay} but I(A) = {r.I_invariant}")
    if r.reg < r.q - 1:
        raise InternalError(f"reg {r.reg} below indeg - 1 = {r.q - 1}")
    r = replace(r, minimal_multiplicity=_minimal_multiplicity(r))
    if checks:
        r = replace(r, checks=run_checks(r, field))
    return r


# ---------------------------------------------------------------------------
# monomial route


def _strip_linear(ideal: MonomialIdeal) -> tuple[MonomialIdeal, tuple[int, ...]]:
    linear = [k for k in range(ideal.nvars) if any(sum(g) == 1 and g[k] == 1 for g in ideal.gens)]
    if not linear:
        return ideal, ()
    keep = [k for k in range(ideal.nvars) if k not in linear]
    gens = [tuple(g[k] for k in keep) for g in ideal.gens if not any(g[k] for k in linear)]
    return mono.minimal_generators(gens, len(keep)), tuple(k + 1 for k in linear)


def minimal_prime_dimensions(ideal: MonomialIdeal) -> list[int]:
    """Krull dimensions of S/P over the minimal primes P of a monomial ideal."""
    v = ideal.nvars
    supports = [sum(1 << k for k, e in enumerate(g) if e) for g in ideal.gens]
    covers = []
    for size in range(v + 1):
        for combo in itertools.combinations(range(v), size):
            m = sum(1 << k for k in combo)
            if all(s & m for s in supports) and not any(c & ~m == 0 for c in covers):
                covers.append(m)
    return sorted(v - popcount(c) for c in covers)


def _serre_row(hs: HilbertSeries, low: int) -> tuple[dict[int, int], int | None]:
    """dim [H^d]_n = (-1)^d (HF(n) - HP(n)) for a Cohen-Macaulay ring, n >= low."""
    d = hs.dimension
    top = hs.degree
    row = {}
    for n in range(min(low, top), top + 1):
        val = (-1) ** d * (hs.coefficient(n) - hs.hilbert_polynomial(n))
        if val:
            row[n] = val
    return row, (top if row else None)


def _lc_from_cm_quotient(d: int, h0: dict[int, int], hs_b: HilbertSeries, low: int) -> LocalCohomologyTable:
    top_row, a = _serre_row(hs_b, low)
    lo = min([low] + list(top_row))
    hi = max([0] + list(top_row) + list(h0))
    if d == 0:
        raise ValueError("d = 0 has no quotient route")
    rows = [dict(h0)] + [{} for _ in range(1, d)] + [top_row]
    tops = [max(h0) if h0 else None] + [None] * (d - 1) + [a]
    lengths = [sum(h0.values())] + [0] * (d - 1) + [None]
    return LocalCohomologyTable(d, (lo, hi), tuple(rows), tuple(tops), tuple(lengths))


def _lc_artinian(hs: HilbertSeries, low: int) -> LocalCohomologyTable:
    """H^0 of an Artinian ring is the ring itself."""
    row = {n: x for n, x in enumerate(hs.reduced[0]) if x}
    return LocalCohomologyTable(0, (low, max(row)), (row,), (max(row),), (None,))


def _lc_partial(d: int, h0: dict[int, int], low: int) -> LocalCohomologyTable:
    rows = [dict(h0)] + [None] * d
    tops = [max(h0) if h0 else None] + [None] * d
    lengths = [sum(h0.values())] + [None] * d
    hi = max([0] + list(h0))
    return LocalCohomologyTable(d, (low, hi), tuple(rows), tuple(tops), tuple(lengths))


def analyze_monomial(ideal: MonomialIdeal, field: FieldSpec = QQ, *, checks: bool = True,
                     degree_cap: int | None = None, provenance: Sequence[str] = ()) -> InvariantReport:
    """Report for S/I.

    Buchsbaum is decided through the saturation U = I : 𝔑^∞: it is *no* when
    𝔑U ⊄ I or when a minimal prime has dimension strictly between 0 and d,
    *yes* when A or B = S/U is Cohen-Macaulay of dimension d, and *unknown*
    otherwise.  Squarefree ideals go through the exact Stanley-Reisner route.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal is not a valid input; use a complex for a polynomial ring")
    if ideal.is_unit:
        raise ValueError("the unit ideal has an empty quotient")
    original = ideal
    ideal, stripped = _strip_linear(ideal)
    if ideal.is_squarefree:
        delta = mono.ideal_to_complex(ideal) if not ideal.is_zero else SimplicialComplex.from_masks(
            ideal.nvars, [(1 << ideal.nvars) - 1])
        r = analyze_sr(delta, field, checks=False, source="ideal", provenance=provenance)
        r = replace(r, stripped=stripped + r.stripped, complex=r.complex)
        return _finish(r, field, checks)
    v = ideal.nvars
    hs = mono.hilbert_series(ideal)
    d, e = hs.dimension, hs.multiplicity
    q = mono.initial_degree(ideal)
    betti = mono.graded_betti_koszul(ideal, field, degree_cap)
    if betti.indeg != q:
        raise InternalError(f"β_1 starts in degree {betti.indeg}, generators in degree {q}")
    if not betti.truncated and _betti_series(betti) != mono._trim(list(hs.numerator)):
        raise InternalError("Betti numbers do not reproduce the Hilbert series")
    depth = v - betti.pd
    sat = mono.saturation(ideal)
    h0 = mono.quotient_dims(sat, ideal) if sat != ideal else {}
    low = -(v + 1)
    cm = depth == d
    quotient_cm = None
    quotient_betti = None
    lc: LocalCohomologyTable
    if cm:
        lc = _lc_from_cm_quotient(d, {}, hs, low) if d else _lc_artinian(hs, low)
        quotient_cm, quotient_betti = True, betti
        bbm, reason = "yes", "Cohen-Macaulay"
    else:
        sat_in = mono.multiply_by_irrelevant(sat) <= ideal
        hs_b = mono.hilbert_series(sat) if sat != ideal else hs
        quotient_betti = mono.graded_betti_koszul(sat, field) if sat != ideal else betti
        depth_b = v - quotient_betti.pd
        quotient_cm = hs_b.dimension == d and depth_b == d
        lc = _lc_from_cm_quotient(d, h0, hs_b, low) if quotient_cm else _lc_partial(d, h0, low)
        dims = minimal_prime_dimensions(ideal)
        if not sat_in:
            bbm, reason = "no", "𝔑·(I : 𝔑^∞) ⊄ I"
        elif any(0 < x < d for x in dims):
            bbm, reason = "no", "a minimal prime has dimension strictly between 0 and d"
        elif quotient_cm:
            bbm, reason = "yes", "𝔑·H^0 = 0 and A/H^0 Cohen-Macaulay"
        else:
            bbm, reason = "unknown", "A/H^0 is not Cohen-Macaulay; no decision procedure"
    if lc.all_known():
        if lc.regularity != betti.reg and not betti.truncated:
            raise InternalError(f"reg from Betti numbers {betti.reg} != reg from local cohomology {lc.regularity}")
        if lc.depth != depth:
            raise InternalError(f"depth v - pd = {depth} != depth from local cohomology {lc.depth}")
    report = InvariantReport(
        source="ideal", characteristic=field.characteristic, v=v, d=d, c=v - d, q=q, e=e,
        depth=depth, reg=betti.reg, pd=betti.pd, a_invariant=lc.a_invariant, hilbert=hs,
        betti=betti, local_cohomology=lc, I_invariant=_buchsbaum_invariant(lc, d),
        cohen_macaulay=cm, buchsbaum=bbm, buchsbaum_reason=reason,
        linear_resolution_degree=q if betti.reg == q - 1 else None,
        minimal_multiplicity="no", polynomial_ring=False, ideal=ideal,
        quotient_cm=quotient_cm, quotient_betti=quotient_betti, saturation=sat,
        stripped=stripped, provenance=tuple(provenance),
    )
    return _finish(report, field, checks)

"""File formats: complexes, monomial ideals and analysis reports, all JSON.

Vertices are 1-based in files and 0-based in memory.  Every number in a report
is written as a decimal string of an exact integer or fraction, so documents
are byte-stable and parse back to equal objects.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .complex import ComplexError, SimplicialComplex, build_complex
from .invariants import CheckResult, InvariantReport
from .monomial import Monomial, MonomialIdeal, minimal_generators

COMPLEX_FORMAT = "minmult.complex/1"
IDEAL_FORMAT = "minmult.ideal/1"
REPORT_FORMAT = "minmult.report/1"
CENSUS_FORMAT = "minmult.census/1"
EXPECTED_FORMAT = "minmult.expected/1"

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$")


class ParseError(ValueError):
    """The input document is not a valid complex or ideal file."""


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    return doc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# complexes


def complex_to_doc(delta: SimplicialComplex) -> dict:
    return {"format": COMPLEX_FORMAT, "vertices": delta.num_vertices,
            "facets": [list(f) for f in delta.facet_sets()]}


def complex_from_doc(doc: dict) -> SimplicialComplex:
    v = doc.get("vertices")
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ParseError("'vertices' must be a non-negative integer")
    facets = doc.get("facets")
    if not isinstance(facets, list):
        raise ParseError("'facets' must be a list of vertex lists")
    for k, facet in enumerate(facets, 1):
        if not isinstance(facet, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in facet):
            raise ParseError(f"facet #{k} {facet!r} is not a list of integers")
        bad = [x for x in facet if not 1 <= x <= v]
        if bad:
            raise ParseError(f"facet #{k} {facet} uses vertex {bad[0]} outside 1..{v}")
        if len(set(facet)) != len(facet):
            raise ParseError(f"facet #{k} {facet} repeats a vertex")
    try:
        return build_complex(v, facets)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def parse_complex(text: str) -> SimplicialComplex:
    return complex_from_doc(_load(text))


# ---------------------------------------------------------------------------
# ideals


def default_variables(n: int) -> list[str]:
    return [f"X{i}" for i in range(1, n + 1)]


def monomial_to_string(m: Monomial, variables: list[str]) -> str:
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(variables, m) if e]
    return "*".join(parts) or "1"


def parse_monomial(text: str, variables: list[str]) -> Monomial:
    index = {name: i for i, name in enumerate(variables)}
    exps = [0] * len(variables)
    if text.strip() == "1":
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise ParseError(f"cannot read factor {factor!r} in {text!r}")
        name, power = match.group(1), int(match.group(2) or 1)
        if name not in index:
            raise ParseError(f"unknown variable {name!r} in {text!r}")
        exps[index[name]] += power
    return tuple(exps)


def ideal_to_doc(ideal: MonomialIdeal, variables: list[str] | None = None) -> dict:
    names = list(variables) if variables else default_variables(ideal.nvars)
    return {"format": IDEAL_FORMAT, "variables": names,
            "generators": [monomial_to_string(g, names) for g in ideal.gens]}


def ideal_from_doc(doc: dict) -> tuple[MonomialIdeal, list[str]]:
    names = doc.get("variables")
    if not isinstance(names, list) or not all(isinstance(x, str) and _NAME.fullmatch(x) for x in names):
        raise ParseError("'variables' must be a list of identifiers")
    if len(set(names)) != len(names):
        raise ParseError("variable names must be distinct")
    gens = doc.get("generators")
    if not isinstance(gens, list):
        raise ParseError("'generators' must be a list")
    mons = []
    for k, g in enumerate(gens, 1):
        if isinstance(g, str):
            mons.append(parse_monomial(g, names))
        elif isinstance(g, list) and all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in g):
            if len(g) != len(names):
                raise ParseError(f"generator #{k} {g} has {len(g)} exponents for {len(names)} variables")
            mons.append(tuple(g))
        else:
            raise ParseError(f"generator #{k} {g!r} is neither a monomial string nor an exponent vector")
    return minimal_generators(mons, len(names)), names


def parse_ideal(text: str) -> tuple[MonomialIdeal, list[str]]:
    return ideal_from_doc(_load(text))


def detect_kind(doc: dict) -> str:
    fmt = doc.get("format")
    if fmt == COMPLEX_FORMAT or (fmt is None and "facets" in doc):
        return "complex"
    if fmt == IDEAL_FORMAT or (fmt is None and "generators" in doc):
        return "ideal"
    raise ParseError("cannot tell whether the file holds a complex or an ideal")


# ---------------------------------------------------------------------------
# reports


def exact(value: Any) -> Any:
    """Replace every number by its exact decimal string, recursively."""
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if hasattr(value, "value") and isinstance(value.value, str):  # enums
        return value.value
    if isinstance(value, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (frozenset, set)) else value
        return [exact(v) for v in items]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _check_doc(c: CheckResult) -> dict:
    return {"name": c.name, "verdict": c.verdict.value, "kind": c.kind, "note": c.note,
            "evidence": exact(dict(c.evidence))}


@dataclass
class ReportDocument:
    """Serializable mirror of an :class:`InvariantReport`."""

    fields: dict
    checks: list
    provenance: list

    @classmethod
    def from_report(cls, r: InvariantReport, variables: list[str] | None = None) -> "ReportDocument":
        total = r.ideal.nvars + len(r.stripped)
        names = list(variables) if variables and len(variables) == total else default_variables(total)
        kept = [n for i, n in enumerate(names) if i + 1 not in r.stripped]
        lc = r.local_cohomology
        num, exp = r.hilbert.reduced
        fields = {
            "source": r.source, "characteristic": r.characteristic,
            "v": r.v, "d": r.d, "c": r.c, "q": r.q, "e": r.e, "depth": r.depth, "reg": r.reg, "pd": r.pd,
            "a_invariant": r.a_invariant, "I_invariant": r.I_invariant,
            "cohen_macaulay": r.cohen_macaulay, "buchsbaum": r.buchsbaum, "buchsbaum_reason": r.buchsbaum_reason,
            "linear_resolution_degree": r.linear_resolution_degree,
            "minimal_multiplicity": r.minimal_multiplicity,
            "minimal_multiplicity_degree": r.minimal_multiplicity_degree,
            "polynomial_ring": r.polynomial_ring,
            "stripped": list(r.stripped),
            "f_vector": r.f_vector, "h_vector": r.h_vector,
            "hilbert_series": {"numerator": list(num), "denominator_exponent": exp},
            "betti": [list(t) for t in r.betti.entries],
            "betti_truncated": r.betti.truncated,
            "local_cohomology": {
                "window": list(lc.window),
                "rows": [None if row is None else [[n, x] for n, x in sorted(row.items())] for row in lc.rows],
                "top_degrees": list(lc.top_degrees),
                "lengths": list(lc.lengths),
            },
            "h_lengths": list(r.h_lengths),
            "quotient_cm": r.quotient_cm,
            "variables": kept,
            "generators": [monomial_to_string(g, kept) for g in r.ideal.gens],
        }
        if r.complex is not None:
            fields["facets"] = [list(f) for f in r.complex.facet_sets()]
        return cls(exact(fields), [_check_doc(c) for c in r.checks], list(r.provenance))

    def to_dict(self) -> dict:
        return {"format": REPORT_FORMAT, "report": self.fields, "checks": self.checks,
                "provenance": self.provenance}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        doc = _load(text)
        if doc.get("format") != REPORT_FORMAT:
            raise ParseError(f"expected format {REPORT_FORMAT!r}")
        return cls(doc["report"], doc["checks"], doc["provenance"])

    def render_text(self) -> str:
        f = self.fields
        lines = []
        for key, val in f.items():
            if key in ("betti", "local_cohomology"):
                continue
            lines.append(f"{key}: {_flat(val)}")
        lines.append("betti (i, j, beta): " + "; ".join(" ".join(t) for t in f["betti"]))
        lc = f["local_cohomology"]
        for i, row in enumerate(lc["rows"]):
            body = "unknown" if row is None else (", ".join(f"[{n}]={x}" for n, x in row) or "0")
            lines.append(f"H^{i} on window {lc['window'][0]}..{lc['window'][1]}: {body}"
                         f" (length {_flat(lc['lengths'][i])}, top {_flat(lc['top_degrees'][i])})")
        for c in self.checks:
            ev = ", ".join(f"{k}={_flat(v)}" for k, v in c["evidence"].items())
            note = f" [{c['note']}]" if c["note"] else ""
            lines.append(f"check {c['name']}: {c['verdict']}{note} {{{ev}}}")
        for p in self.provenance:
            lines.append(f"provenance: {p}")
        return "\n".join(lines) + "\n"


def _flat(val: Any) -> str:
    if val is None:
        return "-"
    if isinstance(val, list):
        return "(" + ", ".join(_flat(v) for v in val) + ")"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_flat(v)}" for k, v in val.items()) + "}"
    return str(val)

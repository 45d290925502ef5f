"""Constructors for the standard example families, each with expected report values."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from .complex import SimplicialComplex, alexander_dual, build_complex, cyclic_polytope_boundary, disjoint_union, simplex
from .invariants import InvariantReport, binom, h_max
from .monomial import MonomialIdeal, minimal_generators, multiply_by_irrelevant, power_of_variables, product

FAMILIES = (
    "disjoint_simplices",
    "goto_family",
    "f_times_irrelevant",
    "cyclic_dual",
    "hanano",
    "non_buchsbaum",
    "exmulti2",
)


class FamilyError(ValueError):
    """Unknown family or parameters outside its range."""


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[tuple[str, Any], ...] = ()

    @classmethod
    def of(cls, name: str, **params) -> "FamilySpec":
        return cls(name, tuple(sorted(params.items())))

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    obj: SimplicialComplex | MonomialIdeal
    variables: tuple[str, ...]
    provenance: str
    expected: dict = field(default_factory=dict, compare=False)

    @property
    def is_complex(self) -> bool:
        return isinstance(self.obj, SimplicialComplex)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def _names(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def disjoint_simplices(d: int, e: int) -> FamilyInstance:
    _require(d >= 1 and e >= 1, "disjoint_simplices needs d >= 1, e >= 1")
    delta = simplex(d)
    for _ in range(e - 1):
        delta = disjoint_union(delta, simplex(d))
    c = (e - 1) * d
    expected = {"d": d, "c": c, "q": 2, "e": e, "buchsbaum": "yes",
                "minimal_multiplicity": "yes", "minimal_multiplicity_degree": 2,
                "e_equals_srmm_bound": Fraction(c + d, d) == e}
    return FamilyInstance(FamilySpec.of("disjoint_simplices", d=d, e=e), delta,
                          tuple(_names("X", d * e)), "disjoint union of simplices", expected)


def x_power_times_irrelevant(c: int, d: int, q: int) -> FamilyInstance:
    """(X_1..X_c, Y_1..Y_d)·(X_1..X_c)^{q-1} in c + d variables."""
    _require(c >= 1 and d >= 1 and q >= 2, "x_power_times_irrelevant needs c >= 1, d >= 1, q >= 2")
    ideal = multiply_by_irrelevant(power_of_variables(c + d, range(c), q - 1))
    expected = {"d": d, "c": c, "q": q, "e": binom(c + q - 2, q - 2), "h0": binom(c + q - 2, q - 1),
                "depth": 0, "reg": q - 1, "buchsbaum": "yes", "minimal_multiplicity": "yes",
                "minimal_multiplicity_degree": q, "quotient_cm": True, "quotient_linear_degree": q - 1}
    return FamilyInstance(FamilySpec.of("goto_family", c=c, d=d, q=q), ideal,
                          tuple(_names("X", c) + _names("Y", d)), "irrelevant ideal times a power of X", expected)


def f_times_irrelevant(f: tuple[int, ...], variables: tuple[str, ...] | None = None) -> FamilyInstance:
    """f·𝔑 for a monomial f of degree q - 1 >= 1."""
    f = tuple(int(x) for x in f)
    q = sum(f) + 1
    _require(len(f) >= 2 and q >= 2, "f_times_irrelevant needs a nonconstant monomial in at least 2 variables")
    v = len(f)
    ideal = multiply_by_irrelevant(minimal_generators([f], v))
    names = tuple(variables) if variables else tuple(_names("X", v))
    expected = {"d": v - 1, "c": 1, "q": q, "e": q - 1, "h0": 1, "depth": 0, "reg": q - 1,
                "buchsbaum": "yes", "minimal_multiplicity": "yes", "minimal_multiplicity_degree": q}
    return FamilyInstance(FamilySpec.of("f_times_irrelevant", f=f), ideal, names,
                          "monomial times the irrelevant ideal", expected)


def y_power_times_irrelevant(d: int, q: int) -> FamilyInstance:
    """Y^{q-1}·𝔑 in k[X_1..X_d, Y]."""
    _require(d >= 1 and q >= 2, "needs d >= 1, q >= 2")
    inst = f_times_irrelevant((0,) * d + (q - 1,), tuple(_names("X", d) + ["Y"]))
    return FamilyInstance(FamilySpec.of("f_times_irrelevant", d=d, q=q), inst.obj, inst.variables,
                          inst.provenance, inst.expected)


def cyclic_dual(q: int, d: int) -> FamilyInstance:
    """Alexander dual of the boundary of C(2d-q+2, 2(d-q+1))."""
    _require(2 <= q <= d, "cyclic_dual needs 2 <= q <= d")
    n, f = 2 * d - q + 2, 2 * (d - q + 1)
    delta = alexander_dual(cyclic_polytope_boundary(n, f))
    c = d - q + 2
    expected = {"d": d, "c": c, "q": q, "buchsbaum": "yes", "minimal_multiplicity": "yes",
                "minimal_multiplicity_degree": q, "h": 1, "h_max": h_max(c, d, q)}
    return FamilyInstance(FamilySpec.of("cyclic_dual", q=q, d=d), delta, tuple(_names("X", n)),
                          "Alexander dual of a cyclic polytope boundary", expected)


HANANO_FACETS = ((1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5), (2, 4, 5))


def hanano() -> FamilyInstance:
    delta = build_complex(5, HANANO_FACETS)
    expected = {"d": 3, "c": 2, "q": 3, "e": 5, "f_vector": (1, 5, 10, 5), "h_vector": (1, 2, 3, -1),
                "h_lengths": (0, 0, 1), "a_invariant": -2, "reg": 2, "I_invariant": 1, "buchsbaum": "yes",
                "linear_resolution_degree": 3, "minimal_multiplicity": "yes", "minimal_multiplicity_degree": 3}
    return FamilyInstance(FamilySpec.of("hanano"), delta, tuple(_names("X", 5)),
                          "two-dimensional complex on five vertices with five facets", expected)


def non_buchsbaum(d: int, q: int) -> FamilyInstance:
    """X_0·(X_0, ..., X_d)^{q-1}."""
    _require(d >= 2 and q >= 2, "non_buchsbaum needs d >= 2, q >= 2")
    v = d + 1
    ideal = product(minimal_generators([(1,) + (0,) * d], v), power_of_variables(v, range(v), q - 1))
    expected = {"d": d, "c": 1, "q": q, "e": 1, "buchsbaum": "yes" if q == 2 else "no"}
    names = tuple(f"X{i}" for i in range(v))
    return FamilyInstance(FamilySpec.of("non_buchsbaum", d=d, q=q), ideal, names,
                          "X_0 times a power of the irrelevant ideal", expected)


def exmulti2(item: int, d: int, c: int = 1, verbatim: bool = False) -> FamilyInstance:
    """Rings of multiplicity at most 2; item 4 is Y²·𝔑 unless ``verbatim`` asks for (X_iY²)."""
    _require(item in (1, 2, 3, 4), "exmulti2 item must be 1..4")
    _require(d >= 1, "exmulti2 needs d >= 1")
    spec = FamilySpec.of("exmulti2", item=item, d=d, **({"c": c} if item == 3 else {}),
                         **({"verbatim": True} if verbatim and item == 4 else {}))
    xs = _names("X", d)
    if item == 1:
        v = d + 1
        gens = [tuple(1 if k in (i, d) else 0 for k in range(v)) for i in range(d)] + [(0,) * d + (2,)]
        expected = {"d": d, "depth": 0, "e": 1, "buchsbaum": "yes", "minimal_multiplicity": "yes",
                    "minimal_multiplicity_degree": 2}
        return FamilyInstance(spec, minimal_generators(gens, v), tuple(xs + ["Y"]), "(X_iY, Y^2)", expected)
    if item in (2, 3):
        _require(item == 2 or c >= 1, "item 3 needs c >= 1")
        extra = c if item == 3 else 0
        v = 2 * d + extra
        gens = [tuple(1 if k in (i, d + j) else 0 for k in range(v)) for i in range(d) for j in range(d)]
        ideal = minimal_generators(gens, v)
        names = xs + _names("Y", d) + (_names("Z", c) if item == 3 else [])
        if item == 3:
            zs = minimal_generators([tuple(1 if k == 2 * d + i else 0 for k in range(v)) for i in range(c)], v)
            ideal = minimal_generators(ideal.gens + multiply_by_irrelevant(zs).gens, v)
        expected = {"d": d, "e": 2, "depth": 1 if item == 2 else 0, "buchsbaum": "yes"}
        if item == 3:
            expected["c"] = d + c
            if d >= 2:
                # S/sat is (X)∩(Y), not CM, so the saturation route cannot settle it
                expected.update(buchsbaum="unknown", minimal_multiplicity="unknown")
        elif d >= 2:
            expected.update(minimal_multiplicity="yes", minimal_multiplicity_degree=2)
        return FamilyInstance(spec, ideal, tuple(names), "(X) ∩ (Y)" + (" + (Z)𝔑" if item == 3 else ""), expected)
    v = d + 1
    if verbatim:
        gens = [tuple(1 if k == i else 0 for k in range(d)) + (2,) for i in range(d)]
        return FamilyInstance(spec, minimal_generators(gens, v), tuple(xs + ["Y"]), "(X_iY^2) as printed", {})
    ideal = multiply_by_irrelevant(minimal_generators([(0,) * d + (2,)], v))
    expected = {"d": d, "c": 1, "q": 3, "depth": 0, "e": 2, "buchsbaum": "yes", "minimal_multiplicity": "yes",
                "minimal_multiplicity_degree": 3}
    return FamilyInstance(spec, ideal, tuple(xs + ["Y"]), "Y^2 times the irrelevant ideal", expected)


def generate_family(spec: FamilySpec | str, **params) -> FamilyInstance:
    if isinstance(spec, FamilySpec):
        name, params = spec.name, dict(spec.params)
    else:
        name = spec
    params = {k: v for k, v in params.items() if v is not None}
    builders = {
        "disjoint_simplices": lambda p: disjoint_simplices(p["d"], p["e"]),
        "goto_family": lambda p: x_power_times_irrelevant(p["c"], p["d"], p["q"]),
        "f_times_irrelevant": lambda p: (f_times_irrelevant(tuple(p["f"])) if "f" in p
                                         else y_power_times_irrelevant(p["d"], p["q"])),
        "cyclic_dual": lambda p: cyclic_dual(p["q"], p["d"]),
        "hanano": lambda p: hanano(),
        "non_buchsbaum": lambda p: non_buchsbaum(p["d"], p["q"]),
        "exmulti2": lambda p: exmulti2(p["item"], p["d"], p.get("c", 1), bool(p.get("verbatim", False))),
    }
    if name not in builders:
        raise FamilyError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    try:
        return builders[name](params)
    except KeyError as exc:
        raise FamilyError(f"family {name} is missing parameter {exc.args[0]!r}") from None


def report_value(report: InvariantReport, key: str):
    """Look up an expected-value key on a report."""
    if key == "h0":
        return report.h_lengths[0] if report.d else None
    if key == "h":
        return report.local_cohomology.lengths[report.q - 1] if 1 <= report.q <= report.d else None
    if key == "h_max":
        return h_max(report.c, report.d, report.q)
    if key == "h_lengths":
        return tuple(report.h_lengths)
    if key == "quotient_linear_degree":
        qb = report.quotient_betti
        return qb.indeg if qb is not None and qb.reg == qb.indeg - 1 else None
    if key == "e_equals_srmm_bound":
        return Fraction(report.c + report.d, report.d) == report.e
    return getattr(report, key)


def golden_mismatches(inst: FamilyInstance, report: InvariantReport) -> list[str]:
    """Expected fields that the report does not reproduce."""
    out = []
    for key, want in inst.expected.items():
        got = report_value(report, key)
        if got != want:
            out.append(f"{key}: expected {want}, got {got}")
    return out

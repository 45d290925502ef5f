"""``minmult`` command line: analyze, generate, search and verify-paper.

Exit codes: 0 success, 1 a golden criterion failed, 2 unreadable input or bad
parameters, 3 an internal consistency check disagreed (a dump file is
written), 4 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import io
from .complex import CapExceeded, from_canonical_form
from .families import FAMILIES, FamilyError, FamilySpec, generate_family
from .homology import FieldSpec
from .invariants import EquivalenceViolation, InternalError, analyze_monomial, analyze_sr
from .search import census, hunt_kamoi_vogel_equality
from .verify import run_suite, summary

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_VIOLATION, EXIT_CAP = 0, 1, 2, 3, 4


def _field(char: int) -> FieldSpec:
    try:
        return FieldSpec(char)
    except ValueError as exc:
        raise io.ParseError(str(exc)) from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump_violation(exc: Exception, dump_dir: str) -> Path:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, EquivalenceViolation):
        payload["dump"] = io.exact(exc.dump)
    text = io.dumps(payload)
    path = Path(dump_dir) / f"minmult-violation-{hashlib.sha256(text.encode()).hexdigest()[:12]}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path


# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    doc = io._load(text)
    kind = "complex" if args.complex else "ideal" if args.ideal else io.detect_kind(doc)
    field = _field(args.char)
    if kind == "complex":
        delta = io.complex_from_doc(doc)
        report = analyze_sr(delta, field, provenance=(f"file {args.input}",))
        names = None
    else:
        ideal, names = io.ideal_from_doc(doc)
        if ideal.is_zero or ideal.is_unit:
            raise io.ParseError("the ideal must be proper and nonzero")
        report = analyze_monomial(ideal, field, provenance=(f"file {args.input}",))
    rdoc = io.ReportDocument.from_report(report, names)
    _write(rdoc.to_json() if args.format == "structured" else rdoc.render_text(), args.out)
    return EXIT_OK


def _family_params(args) -> dict:
    params = {k: getattr(args, k) for k in ("d", "e", "c", "q", "item")}
    if args.f:
        params["f"] = tuple(int(x) for x in args.f.split(","))
    if args.verbatim:
        params["verbatim"] = True
    return {k: v for k, v in params.items() if v is not None}


def cmd_generate(args) -> int:
    params = _family_params(args)
    inst = generate_family(FamilySpec.of(args.family, **params))
    if inst.is_complex:
        doc = io.complex_to_doc(inst.obj)
    else:
        doc = io.ideal_to_doc(inst.obj, list(inst.variables))
    doc["family"] = {"name": inst.spec.name, "params": io.exact(dict(inst.spec.params)),
                     "provenance": inst.provenance}
    _write(io.dumps(doc), args.out)
    if args.out:
        sidecar = {"format": io.EXPECTED_FORMAT, "family": inst.spec.name,
                   "params": io.exact(dict(inst.spec.params)), "expected": io.exact(inst.expected)}
        Path(args.out + ".expected.json").write_text(io.dumps(sidecar), encoding="utf-8")
    return EXIT_OK


def _row_doc(row) -> dict:
    out = {k: getattr(row, k) for k in ("n", "d", "c", "q", "e", "h", "h_max", "buchsbaum", "cohen_macaulay",
                                        "linear", "minimal_multiplicity", "count")}
    out["attains_h_max"] = row.attains_h_max
    out["witness"] = io.complex_to_doc(row.witness_complex())
    if row.classes:
        out["classes"] = [io.complex_to_doc(from_canonical_form(c))["facets"] for c in row.classes]
    return io.exact(out)


def cmd_search(args) -> int:
    field = _field(args.char)
    rows = census(args.n, args.dim, field, q=args.q, require_minimal=args.require_minimal,
                  jobs=args.jobs, per_class=args.per_class)
    doc = {"format": io.CENSUS_FORMAT, "n": str(args.n), "dim": str(args.dim), "characteristic": str(args.char),
           "filters": {"q": None if args.q is None else str(args.q),
                       "require_minimal": "yes" if args.require_minimal else "no"},
           "rows": [_row_doc(r) for r in rows]}
    if args.kamoi_vogel:
        hits = hunt_kamoi_vogel_equality(args.n, args.dim, field, jobs=args.jobs)
        doc["kamoi_vogel_equality_without_linear"] = [io.complex_to_doc(h) for h in hits]
    if args.witness_dir:
        base = Path(args.witness_dir)
        base.mkdir(parents=True, exist_ok=True)
        for k, r in enumerate(rows, 1):
            (base / f"witness-{k:03d}.json").write_text(io.dumps(io.complex_to_doc(r.witness_complex())),
                                                       encoding="utf-8")
    _write(io.dumps(doc), args.out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = run_suite(_field(args.char), quick=args.quick)
    sys.stdout.write(summary(results, verbose=not args.brief))
    failed = [r for r in results if not r.passed]
    if failed:
        sys.stdout.write(f"first failing criterion: {failed[0].number} ({failed[0].title})\n")
        return EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minmult", description=__doc__.splitlines()[0])
    parser.add_argument("--dump-dir", default=".", help="where consistency-violation dumps go")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report every invariant and check for one input file")
    p.add_argument("input")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--complex", action="store_true", help="input is a complex file")
    kind.add_argument("--ideal", action="store_true", help="input is an ideal file")
    p.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("generate", help="write a member of a named family")
    p.add_argument("family", choices=FAMILIES)
    for name in ("d", "e", "c", "q", "item"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--f", help="exponent vector of f, comma separated (f_times_irrelevant)")
    p.add_argument("--verbatim", action="store_true", help="exmulti2 item 4 exactly as printed")
    p.add_argument("--out", help="output file; also writes <out>.expected.json")
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("search", help="census of pure complexes on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("dim", type=int)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--q", type=int)
    p.add_argument("--require-minimal", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--per-class", action="store_true", help="list every class in each row")
    p.add_argument("--kamoi-vogel", action="store_true",
                   help="also list classes with Kamoi-Vogel equality but no linear resolution")
    p.add_argument("--witness-dir")
    p.add_argument("--out")
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("verify-paper", help="run the golden acceptance suite")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="skip the 6-vertex corpora")
    p.add_argument("--brief", action="store_true", help="one line per criterion")
    p.set_defaults(run=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (io.ParseError, FamilyError, OSError, json.JSONDecodeError) as exc:
        print(f"minmult: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"minmult: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (EquivalenceViolation, InternalError) as exc:
        path = _dump_violation(exc, args.dump_dir)
        print(f"minmult: consistency violation: {exc}\ncounterexample written to {path}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"minmult: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

import json

import pytest
from hypothesis import given

from conftest import complexes, monomial_ideals
from minmult import io
from minmult.families import exmulti2, hanano
from minmult.invariants import analyze_monomial, analyze_sr


@given(complexes())
def test_complex_documents_round_trip(delta):
    assert io.parse_complex(io.dumps(io.complex_to_doc(delta))) == delta


@given(monomial_ideals())
def test_ideal_documents_round_trip(ideal):
    ideal2, names = io.parse_ideal(io.dumps(io.ideal_to_doc(ideal)))
    assert ideal2 == ideal and names == io.default_variables(ideal.nvars)


def test_monomial_strings():
    names = ["X", "Y", "Z"]
    assert io.parse_monomial("X^2*Z", names) == (2, 0, 1)
    assert io.parse_monomial(" Y ^ 3 ", names) == (0, 3, 0)
    assert io.parse_monomial("1", names) == (0, 0, 0)
    assert io.monomial_to_string((2, 0, 1), names) == "X^2*Z"


def test_exponent_vectors_are_accepted():
    ideal, _ = io.parse_ideal('{"variables": ["a", "b"], "generators": [[1, 1], "a^2"]}')
    assert set(ideal.gens) == {(1, 1), (2, 0)}


@pytest.mark.parametrize("text, fragment", [
    ("[1, 2]", "top level"),
    ("{not json", "not valid JSON"),
    ('{"vertices": 3, "facets": [[1, 4]]}', "facet #1 [1, 4] uses vertex 4"),
    ('{"vertices": 3, "facets": [[1, 1]]}', "repeats a vertex"),
    ('{"vertices": -1, "facets": []}', "non-negative"),
    ('{"vertices": 2, "facets": [[1, "b"]]}', "not a list of integers"),
])
def test_complex_parse_errors(text, fragment):
    with pytest.raises(io.ParseError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        io.parse_complex(text)


@pytest.mark.parametrize("text, fragment", [
    ('{"variables": ["x", "x"], "generators": []}', "distinct"),
    ('{"variables": ["x"], "generators": ["y"]}', "unknown variable"),
    ('{"variables": ["x"], "generators": ["x^"]}', "cannot read"),
    ('{"variables": ["x"], "generators": [[1, 2]]}', "2 exponents for 1 variables"),
    ('{"variables": ["1x"], "generators": []}', "identifiers"),
])
def test_ideal_parse_errors(text, fragment):
    with pytest.raises(io.ParseError, match=fragment):
        io.parse_ideal(text)


def test_kind_detection():
    assert io.detect_kind({"facets": []}) == "complex"
    assert io.detect_kind({"format": io.IDEAL_FORMAT}) == "ideal"
    with pytest.raises(io.ParseError):
        io.detect_kind({})


def test_exact_numbers_become_strings():
    from fractions import Fraction
    assert io.exact({"a": Fraction(3, 4), (1, 2): [True, 5, None]}) == {"a": "3/4", "1,2": ["yes", "5", None]}


@pytest.mark.parametrize("report", [
    analyze_sr(hanano().obj), analyze_monomial(exmulti2(4, 2).obj),
], ids=["complex", "ideal"])
def test_report_documents_round_trip(report):
    doc = io.ReportDocument.from_report(report)
    text = doc.to_json()
    again = io.ReportDocument.from_json(text)
    assert again == doc and again.to_json() == text
    assert all(isinstance(v, (str, list, dict, type(None))) for v in doc.fields.values())


def test_text_and_structured_reports_carry_the_same_evidence():
    doc = io.ReportDocument.from_report(analyze_sr(hanano().obj))
    text = doc.render_text()
    for c in doc.checks:
        line = next(l for l in text.splitlines() if l.startswith(f"check {c['name']}:"))
        assert c["verdict"] in line
        for key, value in c["evidence"].items():
            assert f"{key}={io._flat(value)}" in line
    assert json.loads(doc.to_json())["report"]["e"] == "5"


def test_named_variables_survive_into_the_report():
    inst = exmulti2(1, 2)
    doc = io.ReportDocument.from_report(analyze_monomial(inst.obj), list(inst.variables))
    assert "Y^2" in doc.fields["generators"]


def test_report_format_is_checked():
    with pytest.raises(io.ParseError):
        io.ReportDocument.from_json('{"format": "other"}')

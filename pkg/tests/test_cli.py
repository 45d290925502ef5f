import json
import subprocess
import sys

import pytest

from minmult import cli, io
from minmult.families import hanano
from minmult.invariants import EquivalenceViolation
from minmult.verify import CriterionResult


@pytest.fixture
def hanano_file(tmp_path):
    path = tmp_path / "hanano.json"
    path.write_text(io.dumps(io.complex_to_doc(hanano().obj)))
    return path


def test_generate_writes_the_object_and_its_expected_values(tmp_path):
    out = tmp_path / "xpow.json"
    assert cli.main(["generate", "goto_family", "--c", "2", "--d", "2", "--q", "3", "--out", str(out)]) == 0
    ideal, names = io.parse_ideal(out.read_text())
    assert len(ideal.gens) == 10 and names == ["X1", "X2", "Y1", "Y2"]
    sidecar = json.loads((tmp_path / "xpow.json.expected.json").read_text())
    assert sidecar["format"] == io.EXPECTED_FORMAT and sidecar["expected"]["e"] == "3"


def test_analyze_structured(hanano_file, tmp_path):
    out = tmp_path / "report.json"
    assert cli.main(["analyze", str(hanano_file), "--format", "structured", "--out", str(out)]) == 0
    doc = io.ReportDocument.from_json(out.read_text())
    assert doc.fields["minimal_multiplicity"] == "yes" and doc.fields["reg"] == "2"


def test_analyze_text_on_stdout(hanano_file, capsys):
    assert cli.main(["analyze", str(hanano_file), "--char", "2"]) == 0
    text = capsys.readouterr().out
    assert "characteristic: 2" in text and "check srmm: holds" in text


def test_analyze_an_ideal_file(tmp_path, capsys):
    path = tmp_path / "ideal.json"
    path.write_text('{"variables": ["x", "y"], "generators": ["x^2", "x*y"]}')
    assert cli.main(["analyze", str(path), "--ideal"]) == 0
    assert "depth: 0" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["analyze", "missing.json"],
    ["analyze", "{bad}"],
    ["generate", "exmulti2", "--item", "9", "--d", "2"],
    ["search", "4", "1", "--char", "6"],
])
def test_bad_input_exits_with_parse_code(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "{bad}").write_text("{bad")
    assert cli.main(argv) == cli.EXIT_PARSE
    assert capsys.readouterr().err.startswith("minmult: ")


def test_bad_facet_is_named(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text('{"vertices": 3, "facets": [[1, 2], [2, 7]]}')
    assert cli.main(["analyze", str(path)]) == cli.EXIT_PARSE
    assert "facet #2 [2, 7]" in capsys.readouterr().err


def test_consistency_violation_writes_a_dump(hanano_file, tmp_path, monkeypatch):
    def explode(*args, **kwargs):
        raise EquivalenceViolation("demo: conditions disagree", {"check": "demo", "input": {"vertices": 5}})

    monkeypatch.setattr(cli, "analyze_sr", explode)
    dumps = tmp_path / "dumps"
    assert cli.main(["--dump-dir", str(dumps), "analyze", str(hanano_file)]) == cli.EXIT_VIOLATION
    [dump] = list(dumps.glob("minmult-violation-*.json"))
    payload = json.loads(dump.read_text())
    assert payload["error"] == "EquivalenceViolation" and payload["dump"]["input"]["vertices"] == "5"


def test_cap_exceeded(capsys):
    assert cli.main(["search", "9", "3"]) == cli.EXIT_CAP
    assert "cap exceeded" in capsys.readouterr().err


def test_search_document(tmp_path):
    out = tmp_path / "census.json"
    wit = tmp_path / "witnesses"
    assert cli.main(["search", "5", "2", "--require-minimal", "--witness-dir", str(wit), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["format"] == io.CENSUS_FORMAT and len(doc["rows"]) == 1
    assert doc["rows"][0]["attains_h_max"] == "yes"
    assert io.parse_complex((wit / "witness-001.json").read_text()).num_vertices == 5


def test_verify_reports_the_first_failure(monkeypatch, capsys):
    fake = [CriterionResult(1, "one", True), CriterionResult(2, "two", False, ["broken"])]
    monkeypatch.setattr(cli, "run_suite", lambda field, quick: fake)
    assert cli.main(["verify-paper", "--brief"]) == cli.EXIT_VERIFY
    out = capsys.readouterr().out
    assert "first failing criterion: 2 (two)" in out and "1/2 criteria passed" in out


def test_verify_success(monkeypatch):
    monkeypatch.setattr(cli, "run_suite", lambda field, quick: [CriterionResult(1, "one", True)])
    assert cli.main(["verify-paper"]) == cli.EXIT_OK


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "minmult.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify-paper" in proc.stdout

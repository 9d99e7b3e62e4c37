from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from stratakit.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, run
from stratakit.extract.fixtures import FIXTURES


def cli(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def zero_pencil(tmp_path):
    path = tmp_path / "zero2x2pencil.json"
    path.write_text(
        json.dumps(
            {"rows": 2, "cols": 2, "grade": 1, "right_minimal_indices": [0, 0], "left_minimal_indices": [0, 0],
             "eigenvalues": []}  # fmt: skip
        )
    )
    return str(path)


def test_codim_zero_pencil(zero_pencil):
    code, out, _ = cli("codim", "--input", zero_pencil)
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["orbit_codim"], data["bundle_codim"]) == (8, 8)


def test_codim_conventions_on_a_fixture():
    _, out, _ = cli("codim", "--fixture", "P5")
    data = json.loads(out)
    assert data["bundle_codim"] == 5 and data["convention"] == "companion" and data["convention_divergence"]
    _, out, _ = cli("--convention", "direct", "codim", "--fixture", "P5")
    assert json.loads(out)["bundle_codim"] == 2
    _, out, _ = cli("codim", "--fixture", "P5", "--convention", "direct", "--output", "text")
    assert out.startswith("orbit codimension 2, bundle codimension 2 (direct convention")


def test_closure_exit_codes():
    code, out, _ = cli("closure", "--kind", "bundle", "--left", "P3.json", "--right", "P8.json")
    assert code == EXIT_NEGATIVE
    assert json.loads(out)["contained"] is False
    code, out, _ = cli("closure", "--kind", "bundle", "--left-fixture", "P3", "--right-fixture", "P9")
    data = json.loads(out)
    assert code == EXIT_OK and data["witness_map"]["blocks"] == [["0/1", "1/1"]]
    assert data["route"] == "companion"
    code, _, _ = cli("closure", "--kind", "orbit", "--left-fixture", "P2", "--right-fixture", "P8")
    assert code == EXIT_OK


def test_closure_on_pencil_files(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"rows": 2, "cols": 2, "grade": 1, "eigenvalues": [{"value": "@x", "segre": [2]}]}))
    b.write_text(json.dumps({"rows": 2, "cols": 2, "grade": 1, "eigenvalues": [{"value": "@x", "segre": [1, 1]}]}))
    code, out, _ = cli("closure", "--kind", "orbit", "--left", str(a), "--right", str(b))
    assert code == EXIT_OK and json.loads(out)["route"] == "pencil"
    code, out, _ = cli("closure", "--kind", "orbit", "--grade-aware", "--left", str(a), "--right", str(b))
    assert code == EXIT_OK and json.loads(out)["route"] == "companion"
    code, _, _ = cli("closure", "--kind", "orbit", "--left", str(b), "--right", str(a))
    assert code == EXIT_NEGATIVE


def test_closure_from_a_matrix_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(FIXTURES["P2"].matrix().to_json()))
    code, _, _ = cli("closure", "--left", str(path), "--right-fixture", "P8")
    assert code == EXIT_OK


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli("codim", "--input", str(bad))[0] == EXIT_INPUT
    assert cli("codim", "--input", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    assert cli("codim")[0] == EXIT_INPUT
    assert cli("codim", "--fixture", "P42")[0] == EXIT_INPUT
    assert cli("nonsense")[0] == EXIT_INPUT
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"rows": 2, "cols": 2, "grade": 2, "eigenvalues": [{"value": "0", "segre": [3]}]}))
    code, _, err = cli("codim", "--input", str(invalid))
    assert code == EXIT_INPUT and "error" in err
    assert cli("bundles", "--m", "2", "--n", "2", "--d", "2", "--output", "dot")[0] == EXIT_INPUT


def test_budget_exit_code():
    assert cli("bundles", "--m", "5", "--n", "5", "--d", "3")[0] == EXIT_BUDGET
    assert cli("bundles", "--m", "3", "--n", "3", "--d", "2", "--max-keys", "5")[0] == EXIT_BUDGET
    code, _, err = cli(
        "--max-eigenvalues", "3", "closure", "--left-fixture", "P1", "--right-fixture", "P19"
    )
    assert code == EXIT_BUDGET and "budget" in err


def test_bundles_listing():
    code, out, _ = cli("bundles", "--m", "2", "--n", "2", "--d", "2", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["count"] == 19
    assert data["bundles"][0]["label"] == "r=(0); l=(0); W=(1);(1);(1);(1)"
    _, text, _ = cli("bundles", "--m", "2", "--n", "2", "--d", "2", "--output", "text")
    assert text.splitlines()[0] == "19 bundles of 2x2 grade-2 polynomials"


def test_hasse_formats():
    code, dot, _ = cli("hasse", "--m", "2", "--n", "2", "--d", "2", "--format", "dot")
    assert code == EXIT_OK and dot.startswith("digraph strata_2x2_2 {")
    _, js, _ = cli("hasse", "--m", "2", "--n", "2", "--d", "1", "--format", "json")
    assert len(json.loads(js)["edges"]) == 8


def test_extract_and_witness(tmp_path):
    code, out, _ = cli("extract", "--fixture", "P9", "--companion")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["eigenstructure"]["eigenvalues"] == [{"value": "0/1", "segre": [4]}]
    assert data["companion_structure"]["rows"] == 4
    mat = tmp_path / "mat.json"
    mat.write_text(json.dumps({"rows": 1, "cols": 1, "grade": 2, "entries": [[["-2", "0", "1"]]]}))
    _, out, _ = cli("extract", "--input", str(mat), "--roots", "0,1")
    values = [e["value"] for e in json.loads(out)["eigenstructure"]["eigenvalues"]]
    assert values == ["@x^2-2#1", "@x^2-2#2"]
    es = tmp_path / "es.json"
    es.write_text(json.dumps({"rows": 1, "cols": 1, "grade": 2, "eigenvalues": [
        {"value": "@e1", "segre": [1]}, {"value": "@e2", "segre": [1]}]}))  # fmt: skip
    code, out, _ = cli("witness", "--input", str(es), "--values", "@e1=0,@e2=1")
    assert code == EXIT_OK
    assert json.loads(out)["entries"] == [[["0/1", "-1/1", "1/1"]]]
    assert cli("witness", "--input", str(es), "--values", "@e1=0")[0] == EXIT_INPUT
    code, out, _ = cli("witness", "--fixture", "P5", "--grade1")
    assert code == EXIT_OK and json.loads(out)["rows"] == 4
    assert cli("extract", "--input", str(es))[0] == EXIT_INPUT


def test_verify_and_ferrers():
    code, out, _ = cli("verify", "--m", "2", "--n", "2", "--d", "2", "--output", "text")
    assert code == EXIT_OK and out.strip() == "19 bundles, all strictness checks pass"
    code, out, _ = cli("ferrers", "--segre", "4,3,3,3,1")
    assert code == EXIT_OK and "Weyr (5,4,4,1)" in out and "Weyr (5,5,4,4,1)" in out
    assert cli("ferrers", "--segre", "4,x")[0] == EXIT_INPUT
    code, out, _ = cli("ferrers", "--segre", "3,0", "--kind", "minimal", "--output", "json")
    assert json.loads(out)[0]["total"] == 2


def test_stdin_input():
    payload = json.dumps({"rows": 1, "cols": 1, "grade": 1, "eigenvalues": [{"value": "2", "segre": [1]}]})
    code, out, _ = cli("codim", "--input", "-", stdin=payload)
    assert code == EXIT_OK and json.loads(out)["bundle_codim"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("hasse", "--m", "2", "--n", "2", "--d", "2", "--format", "dot"),
        ("closure", "--left-fixture", "P2", "--right-fixture", "P3"),
        ("verify", "--m", "2", "--n", "2", "--d", "1"),
    ],
)
def test_output_is_deterministic(argv):
    first = [cli(*argv) for _ in range(2)]
    assert first[0] == first[1]
    runs = [
        subprocess.run([sys.executable, "-m", "stratakit.cli", *argv], capture_output=True, text=True)
        for _ in range(2)
    ]
    assert runs[0].stdout == runs[1].stdout == first[0][1]
    assert runs[0].returncode == first[0][0]


def test_console_script_is_installed():
    res = subprocess.run(["strata-kit", "verify", "--m", "2", "--n", "2", "--d", "2", "--output", "text"],
                         capture_output=True, text=True)  # fmt: skip
    assert res.returncode == 0
    assert res.stdout.strip() == "19 bundles, all strictness checks pass"

import csv
import io
import json
import subprocess
import sys

import pytest

from weighted_hurwitz.cli import run


def run_json(*argv):
    code, text = run(list(argv))
    assert code == 0, text
    return json.loads(text)


def test_hurwitz():
    assert run_json("hurwitz", "--profiles", "2,1|2,1|3")["value"] == "1"
    assert run_json("hurwitz", "--profiles", "2^1,1^3|2,1,1,1|2,1,1,1|2,1,1,1|5")["value"] == "25"


def test_weighted_all_pipelines():
    out = run_json("weighted", "--G", "E(q)", "--d", "1", "--mu", "1,1", "--nu", "2", "--pipeline", "all")
    assert out["agreement"] is True
    assert [r["pipeline"] for r in out["results"]] == ["geometric", "central", "brute"]
    assert {r["value"] for r in out["results"]} == {"1/(2-2*q)"}
    single = run_json("weighted", "--G", "E", "--d", "2", "--mu", "3", "--nu", "1,1,1")
    assert single["value"] == "1/3" and single["pipeline"] == "geometric"


def test_formats():
    code, text = run(["weighted", "--G", "E(q)", "--d", "1", "--mu", "1,1", "--nu", "2", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["value"] == "1/(2-2*q)" and rows[0]["mu"] == "1,1"
    code, text = run(["weighted", "--G", "E(q)", "--d", "2", "--mu", "1,1,1", "--nu", "3", "--format", "latex"])
    assert code == 0 and r"\frac{1+2q}{3-3q-3q^{2}+3q^{3}}" in text


def test_paths_characters_tau():
    out = run_json("paths", "--d", "1", "--mu", "2,1", "--nu", "3")
    assert out["counts"] == [{"signature": "1", "count": 6}]
    assert run_json("characters", "--n", "2") == {"n": 2, "order": ["2", "1,1"], "values": [[1, 1], [-1, 1]]}
    assert run_json("tau-coeff", "--G", "E", "--d", "2", "--mu", "1,1,1", "--nu", "3")["value"] == "1/3"
    tau = run_json("tau-coeff", "--G", "E(q)", "--d", "1", "--mu", "1,1", "--nu", "2", "--q-cutoff", "2")
    assert tau["value"] == "1/2 + (1/2)*q + (1/2)*q^2 + O(q^3)"


def test_quantum_table_fields():
    out = run_json("quantum-table", "--n-max", "3")
    cells = out["cells"]
    assert len(cells) == 6
    keys = {"n", "G", "value", "pipelines", "agreement", "classical_limit", "printed", "matches_printed"}
    for cell in cells:
        assert keys <= set(cell)
        assert cell["agreement"] and cell["classical_limit"]
    by_key = {(c["n"], c["G"]): c for c in cells}
    assert by_key[(2, "E(q)")]["matches_printed"] is True
    assert by_key[(3, "E(q)")]["matches_printed"] is False


def test_verify():
    code, text = run(["verify", "--suite", "plain"])
    out = json.loads(text)
    assert code == 0 and out["passed"] == out["total"] > 0


@pytest.mark.parametrize("argv", [
    ["hurwitz", "--profiles", "2;x"],
    ["hurwitz", "--profiles", "2|2,1"],
    ["weighted", "--G", "nonsense", "--d", "1", "--mu", "2", "--nu", "2"],
    ["weighted", "--G", "E", "--d", "-1", "--mu", "2", "--nu", "2"],
    ["weighted", "--G", "E", "--d", "1", "--mu", "0,2", "--nu", "2"],
    ["weighted", "--G", "E", "--d", "1", "--mu", "2"],
    ["characters", "--n", "11"],
    ["verify", "--suite", "bogus"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_bound_override(monkeypatch):
    monkeypatch.setenv("HURWITZ_MAX_N", "3")
    assert run(["characters", "--n", "4"])[0] == 2
    monkeypatch.setenv("HURWITZ_MAX_N", "12")
    assert run(["characters", "--n", "4"])[0] == 0


def test_deterministic_and_jobs():
    a = run(["quantum-table", "--n-max", "3"])
    b = run(["quantum-table", "--n-max", "3", "--jobs", "2"])
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weighted_hurwitz", "hurwitz", "--profiles", "2|2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "1/2"


def test_bound_applies_after_caching(monkeypatch):
    argv = ["weighted", "--G", "E", "--d", "2", "--mu", "2,1,1", "--nu", "4", "--pipeline", "all"]
    assert run(argv)[0] == 0
    monkeypatch.setenv("HURWITZ_MAX_N", "3")
    assert run(argv)[0] == 2

import io as stdio
import json
import subprocess
import sys

import pytest

from lrbhom import cli, io
from lrbhom.invariants import Report


def call(argv, stdin=""):
    out = stdio.StringIO()
    code = cli.run(argv, stdin=stdio.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_free_three_pipeline():
    code, text = call(["construct", "free", "3"])
    assert code == 0
    code, report = call(["invariants"], stdin=text)
    assert code == 0
    d = json.loads(report)
    assert d["global_dimension"] == 1 and d["size"] == 16
    assert {q["arrows"] for q in d["quiver"]} == {1, 2}


def test_fig2_sphere_from_file(tmp_path):
    path = tmp_path / "fig2.json"
    path.write_text(json.dumps({"dim": 2, "normals": [["0", "1"], ["1", "-1"], ["1", "1"]]}))
    code, text = call(["construct", "arrangement", str(path)])
    assert code == 0
    code, report = call(["verify", "sphere"], stdin=text)
    assert code == 0 and json.loads(report)["passed"]


def test_cycle_four_from_graph_file(tmp_path):
    path = tmp_path / "c4.json"
    path.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]}))
    code, text = call(["construct", "fpc", str(path)])
    code, report = call(["invariants"], stdin=text)
    assert json.loads(report)["global_dimension"] == 2


def test_signs_and_table_inputs(tmp_path):
    code, text = call(["construct", "signs"], stdin=json.dumps({"vectors": ["+", "-"]}))
    assert code == 0 and json.loads(text)["labels"] == ["0", "+", "-"]
    table = {"labels": ["1", "x", "y"], "table": [[0, 1, 2], [1, 1, 1], [2, 2, 2]], "identity": "1"}
    code, text = call(["construct", "table"], stdin=json.dumps(table))
    assert code == 0
    code, report = call(["verify", "treethm", "-", "--field", "Q,F2"], stdin=text)
    assert code == 0


def test_round_trip_is_identical():
    for name in ("free-3", "cycle-4", "fig2-three-lines", "signs-1", "boolean-2"):
        _, first = call(["construct", "builtin", name])
        _, second = call(["construct", "table"], stdin=first)
        assert first == second


def test_reports_are_deterministic():
    a = call(["invariants", "fig2-three-lines", "--field", "Q,F2"])
    b = call(["invariants", "fig2-three-lines", "--field", "Q,F2"])
    assert a == b


def test_dot_output():
    code, dot = call(["dot", "quiver", "free-3"])
    assert code == 0
    assert dot.count("[label=\"s(") == 8
    assert 'n7 -> n0 [label="2"];' in dot
    _, trivial = call(["dot", "quiver", "free-0"])
    assert trivial.count("[label=\"s(") == 1 and "->" not in trivial
    _, quiv = call(["dot", "quiver", "fig2-three-lines"])
    _, hasse = call(["dot", "hasse", "fig2-three-lines"])
    edges = lambda s: sorted(l.split("[")[0].strip(" ;") for l in s.splitlines() if "->" in l)
    assert edges(quiv) == edges(hasse) and len(edges(hasse)) == 6


def test_complex_reports():
    code, text = call(["complex", "clique", "cycle-4"])
    d = json.loads(text)
    assert code == 0 and d["chordal"] is False and d["fields"][0]["leray"] == 2
    code, text = call(["complex", "order", "fig2-three-lines"])
    assert json.loads(text)["fields"][0]["betti"] == {"1": 1}
    code, text = call(["complex", "order"], stdin=json.dumps({"n": 3, "facets": [[0, 1], [1, 2], [0, 2]]}))
    assert json.loads(text)["fields"][0]["betti"] == {"1": 1}


@pytest.mark.parametrize("kind, target", [
    ("mainresult", "free-3"), ("crosscut", "cycle-4"), ("treethm", "free-2"),
    ("leray-bound", "path-3"), ("chain-bound", "boolean-3"), ("fpc", "cycle-4"),
    ("sphere", "boolean-2"),
])
def test_verify_kinds_pass(kind, target):
    code, text = call(["verify", kind, target, "--format", "text"])
    assert code == 0 and text.startswith("PASS")


def test_oracle_command():
    code, text = call(["oracle", "free-2", "--p", "3", "--max-n", "2"])
    d = json.loads(text)
    assert code == 0 and d["discrepancies"] == [] and d["p"] == 3


def test_failure_exit_code(monkeypatch):
    def broken(B, f):
        return Report("chain-bound", False, {"field": str(f)}, [{"gl_dim": 9, "bound": 1}])
    monkeypatch.setattr(cli, "chain_bound_check", broken)
    code, text = call(["verify", "chain-bound", "free-2", "--format", "text"])
    assert code == 1 and "witness" in text


@pytest.mark.parametrize("argv, stdin", [
    (["invariants"], "{not json"),
    (["invariants"], json.dumps({"labels": ["1", "a"], "table": [[0, 1], [1, 0]], "identity": 0})),
    (["invariants", "no-such-file.json"], ""),
    (["invariants", "--field", "F4", "free-2"], ""),
    (["construct", "free", "three"], ""),
    (["verify", "crosscut"], json.dumps({"labels": ["1"], "table": [[0]], "identity": 0})),
    (["verify", "sphere", "free-2"], ""),
    (["bogus"], ""),
])
def test_input_errors_exit_two(argv, stdin):
    assert call(argv, stdin)[0] == 2


def test_cap_exit_three():
    assert call(["construct", "free", "8"])[0] == 3
    assert call(["construct", "free", "6", "--max-size", "100"])[0] == 3
    assert call(["oracle", "free-4"])[0] == 3


def test_cap_override():
    code, text = call(["construct", "free", "5", "--max-size", "400"])
    assert code == 0 and len(json.loads(text)["labels"]) == 326


def test_tampered_source_is_rejected():
    _, text = call(["construct", "builtin", "cycle-4"])
    d = json.loads(text)
    d["source"]["graph"]["edges"] = [[0, 1]]
    assert call(["invariants"], json.dumps(d))[0] == 2


def test_output_file(tmp_path):
    out = tmp_path / "r.json"
    code, text = call(["invariants", "free-2", "-o", str(out)])
    assert code == 0 and text == "" and json.loads(out.read_text())["global_dimension"] == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lrbhom.cli", "construct", "free", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["name"] == "free-2"

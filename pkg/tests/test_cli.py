import json
import shutil
import subprocess

import pytest

from ordsup.cli import main
from ordsup.graphs import SimpleGraph
from ordsup.supergraph import QuotientOrderGraph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_json(capsys):
    code, out, _ = run(capsys, "group", "dihedral:5", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 10 and data["profile"] == {"1": 1, "2": 5, "5": 4}
    assert data["nilpotent"] is False
    assert [f["prime"] for f in data["sylow"]] == [2, 5]


def test_group_perm(capsys):
    code, out, _ = run(capsys, "group", "perm:(1 2 3),(1 2)", "--json")
    assert code == 0
    assert json.loads(out)["profile"] == {"1": 1, "2": 3, "3": 2}


def test_group_text(capsys):
    code, out, _ = run(capsys, "group", "alt:5")
    assert code == 0 and "order     60" in out and "EPPO True  EPO True" in out


def test_group_parse_error(capsys):
    code, _, err = run(capsys, "group", "dihedral:2")
    assert code == 2 and "byte 9" in err


def test_cap_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("ORDSUP_ELEMENT_CAP", "100")
    code, _, _ = run(capsys, "group", "sym:6")
    assert code == 3


def test_bad_cap_value(capsys, monkeypatch):
    monkeypatch.setenv("ORDSUP_ELEMENT_CAP", "lots")
    code, _, _ = run(capsys, "group", "sym:3")
    assert code == 2


def test_graph_dot_file(capsys, tmp_path):
    path = tmp_path / "g.dot"
    code, _, _ = run(capsys, "graph", "cyclic:6", "--dot", str(path))
    text = path.read_text()
    assert code == 0 and text.count(" -- ") == 13
    assert text.count("label=") == 6


def test_graph_dot_stdout_complete(capsys):
    code, out, _ = run(capsys, "graph", "dihedral:4", "--dot", "-")
    assert code == 0 and out.count(" -- ") == 28


def test_graph_json_round_trip(capsys, tmp_path):
    path = tmp_path / "g.json"
    run(capsys, "graph", "dicyclic:3", "--json", str(path))
    G = SimpleGraph.from_json(json.loads(path.read_text()))
    assert G.vertex_count == 12 and G.labels[0] == "e"


def test_graph_quotient(capsys, tmp_path):
    path = tmp_path / "q.json"
    code, _, _ = run(capsys, "graph", "sym:7", "--quotient", "--json", str(path))
    Q = QuotientOrderGraph.from_json(json.loads(path.read_text()))
    assert code == 0 and Q.orders == (1, 2, 3, 4, 5, 6, 7, 10, 12)
    assert Q.total_weight == 5040


def test_graph_needs_quotient_for_profile_only(capsys):
    code, _, err = run(capsys, "graph", "sym:9")
    assert code == 3 and "--quotient" in err
    code, _, _ = run(capsys, "graph", "sym:9", "--quotient")
    assert code == 0


def test_analyze_separable(capsys):
    code, out, _ = run(capsys, "analyze", "separable", "dihedral:5")
    assert code == 0 and out.strip() == "separable, cutset {e}"
    code, out, _ = run(capsys, "analyze", "separable", "sym:3")
    assert code == 1 and out.strip() == "not separable"


def test_analyze_ckappa(capsys):
    code, out, _ = run(capsys, "analyze", "ckappa", "dicyclic:3", "--json")
    data = json.loads(out)
    assert code == 0 and data["value"] == 2 and data["cutset"] == ["e", "a^3"]
    assert data["path"] == "direct+quotient"


def test_analyze_ckappa_quotient_path(capsys):
    code, out, _ = run(capsys, "analyze", "ckappa", "sym:7", "--json")
    data = json.loads(out)
    assert code == 0 and data["path"] == "quotient"
    assert data["value"] == data["cutset_size"]


def test_analyze_ckappa_infinite(capsys):
    code, out, _ = run(capsys, "analyze", "ckappa", "dihedral:6", "--json")
    assert code == 1 and json.loads(out)["value"] == "infinite"


def test_audit_dihedral_csv(capsys, tmp_path):
    out = tmp_path / "d.csv"
    code, _, _ = run(capsys, "audit", "dihedral", "--from", "3", "--to", "64", "--format", "csv", "--out", str(out))
    lines = out.read_text().splitlines()
    assert code == 0 and len(lines) == 63


def test_audit_symmetric_quotient_row(capsys):
    code, out, _ = run(capsys, "audit", "symmetric", "--from", "3", "--to", "7")
    rows = json.loads(out)["rows"]
    assert code == 0 and rows[-1]["path"] == "quotient" and rows[-1]["computed"]


def test_audit_eppo_catalog(capsys):
    code, out, _ = run(capsys, "audit", "eppo", "--catalog", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) > 30 and data["discrepancies"] == []


def test_audit_new_discrepancy_exit_code(capsys, tmp_path):
    empty = tmp_path / "empty.ndjson"
    empty.write_text("")
    args = ["audit", "nilpotent", "--group", "product:dicyclic:2*cyclic:3", "--out", str(tmp_path / "r.json")]
    code, _, err = run(capsys, *args, "--ledger", str(empty))
    assert code == 1 and "new discrepancy" in err
    written = tmp_path / "w.ndjson"
    code, _, _ = run(capsys, *args, "--write-ledger", str(written), "--ledger", str(empty))
    code, _, _ = run(capsys, *args, "--ledger", str(written))
    assert code == 0
    code, _, _ = run(capsys, *args)
    assert code == 0


def test_audit_usage_errors(capsys):
    assert run(capsys, "audit", "dihedral", "--from", "9", "--to", "3")[0] == 2
    assert run(capsys, "audit", "dihedral", "--catalog")[0] == 2
    assert run(capsys, "audit", "eppo", "--from", "3", "--to", "4")[0] == 2
    assert run(capsys, "audit", "dihedral", "--from", "2", "--to", "4")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["audit", "quaternion", "--catalog"])
    assert info.value.code == 2


def test_audit_jobs_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ["audit", "dihedral", "--from", "3", "--to", "40"]
    assert main(base + ["--jobs", "1", "--out", str(a)]) == 0
    assert main(base + ["--jobs", "8", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.skipif(shutil.which("ordsup") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["ordsup", "analyze", "separable", "dihedral:8"], capture_output=True, text=True)
    assert res.returncode == 1 and res.stdout.strip() == "not separable"

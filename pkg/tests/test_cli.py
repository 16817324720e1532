import json

import pytest

from ssla4 import cli


def run(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--max-m", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,m_squared,f,f_pr"
    assert lines[1:] == ["1,1,1,1", "4,16,6,5", "5,25,6,6"]


def test_count_rows(capsys):
    _, out, _ = run(capsys, "count", "--max-m", "1", "--format", "csv")
    assert out.strip().splitlines()[1:] == ["1,1,1,1"]
    _, out, _ = run(capsys, "count", "--max-m", "36", "--format", "json")
    data = json.loads(out)
    assert data["schema_version"] == 1 and len(data["rows"]) == 12
    _, out, _ = run(capsys, "count", "--max-m", "4", "--format", "csv", "--include-zero")
    assert len(out.strip().splitlines()) == 5


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 6
    assert sum(r["generator"] is None for r in data["records"]) == 1
    code, out, _ = run(capsys, "enumerate", "--m", "2", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 0
    _, out, _ = run(capsys, "enumerate", "--m", "1")
    assert "1 similar sublattices" in out


def test_enumerate_budget(capsys):
    code, _, err = run(capsys, "enumerate", "--m", "51")
    assert code == 4 and "budget" in err
    code, _, _ = run(capsys, "enumerate", "--m", "4", "--max-m", "60")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--m", "4")
    assert code == 0 and "6 = construction 6 = oracle 6" in out and "PASS" in out
    code, out, _ = run(capsys, "verify", "--m", "5", "--format", "json")
    assert code == 0 and json.loads(out)["oracle"] == [6, 6]
    code, out, _ = run(capsys, "verify", "--m", "11")
    assert code == 0 and "PASS-with-note" in out


def test_verify_matrix(tmp_path, capsys):
    p = tmp_path / "m.txt"
    p.write_text("2 0 0 0\n0 2 0 0\n0 0 2 0\n0 0 0 2\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--matrix", str(p))
    assert code == 0 and "primitive = False" in out
    p.write_text("2 0 0 0\n0 2 0 0\n0 0 2 0\n0 0 1 2\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--matrix", str(p))
    assert code == 3 and "FAIL" in out
    _, rec, _ = run(capsys, "enumerate", "--m", "5", "--format", "json")
    q = tmp_path / "r.json"
    q.write_text(json.dumps(json.loads(rec)["records"][0]), encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--matrix", str(q))
    assert code == 0


def test_twists_roots(capsys):
    code, out, _ = run(capsys, "twists", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 10 and data["group_order"] == 120 and data["has_order_4"]
    assert all(t["fixed_lattice_is_A4"] for t in data["twist_maps"])
    for name, n in (("H4", 120), ("A4", 20), ("H3", 30)):
        _, out, _ = run(capsys, "roots", "--lattice", name, "--format", "json")
        assert json.loads(out)["count"] == n
    code, _, _ = run(capsys, "roots", "--lattice", "E8")
    assert code == 2


def test_asymptotics(capsys):
    code, out, _ = run(capsys, "asymptotics", "--x", "100000", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["rho"] == "0.538011"
    assert 0.95 <= float(data["ratio"]) <= 1.05


def test_series_and_oracle(capsys, tmp_path):
    _, out, _ = run(capsys, "series", "--lattice", "A2", "--terms", "7", "--format", "csv")
    assert out.strip().splitlines()[-1] == "7,2"
    _, out, _ = run(capsys, "oracle", "--lattice", "a4", "--m", "4", "--format", "json")
    assert (json.loads(out)["total"], json.loads(out)["primitive"]) == (6, 5)
    g = tmp_path / "g.json"
    g.write_text(json.dumps([[2, -1], [-1, 2]]), encoding="utf-8")
    _, out, _ = run(capsys, "oracle", "--gram", str(g), "--index", "7")
    assert "2 similar sublattices" in out
    code, _, _ = run(capsys, "oracle", "--lattice", "a4", "--index", "121")
    assert code == 4


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "count", "--max-m", "0")[0] == 2
    assert run(capsys, "series", "--lattice", "B7")[0] == 2
    assert run(capsys, "twists", "--format", "csv")[0] == 2


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "enumerate", "--m", "20", "--format", "json", "--out", str(a))[0] == 0
    assert run(capsys, "enumerate", "--m", "20", "--format", "json", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_thread_count_invariance(tmp_path, capsys, monkeypatch):
    outs = []
    for t in ("1", "3"):
        monkeypatch.setenv("SSL_THREADS", t)
        _, out, _ = run(capsys, "enumerate", "--m", "20", "--format", "json")
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_record_list(tmp_path, capsys):
    _, rec, _ = run(capsys, "enumerate", "--m", "9", "--format", "json")
    records = json.loads(rec)["records"]
    q = tmp_path / "l.json"
    q.write_text(json.dumps(records), encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--matrix", str(q))
    assert code == 0 and out.count("PASS") == 11
    records[3]["hnf"][3][0] += 1
    q.write_text(json.dumps(records), encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--matrix", str(q), "--format", "json")
    data = json.loads(out)
    assert code == 3 and not data["ok"] and sum(not r["ok"] for r in data["results"]) == 1

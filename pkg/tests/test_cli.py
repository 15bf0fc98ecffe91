import argparse
import json

import numpy as np
import pytest

from pseudoinv.analysis import AnalysisReport
from pseudoinv.cli import EXIT_INVALID, EXIT_OK, EXIT_VIOLATION, main, parse_dims, resolve_seed
from pseudoinv.corpus import load_corpus
from pseudoinv.serialize import matrix_from_json, matrix_to_json


def _write(tmp_path, name, m):
    p = tmp_path / name
    p.write_text(json.dumps(matrix_to_json(np.asarray(m, dtype=float))))
    return str(p)


def _run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_lowner_minus_pair(tmp_path, capsys):
    a = _write(tmp_path, "a.json", [[1, 1], [1, 1]])
    b = _write(tmp_path, "b.json", [[1, 1], [1, 4]])
    code, out, _ = _run(capsys, ["analyze", a, b, "--output", "json"])
    assert code == EXIT_OK
    rep = json.loads(out)
    flags = {v["relation"]: v["holds"] for v in rep["orders"]["verdicts"].values()}
    dflags = {v["relation"]: v["holds"] for v in rep["dagger_orders"]["verdicts"].values()}
    assert flags["lowner"] and flags["minus"] and not flags["star"]
    assert not dflags["minus"]


def test_analyze_text_is_tabular(tmp_path, capsys):
    a = _write(tmp_path, "a.json", np.diag([2.0, 0]))
    b = _write(tmp_path, "b.json", np.diag([1.0, 2]))
    code, out, _ = _run(capsys, ["analyze", a, b])
    assert code == EXIT_OK
    assert "cross-Hermitian (AB*, B*A): yes" in out
    lines = {ln.split()[0]: ln.split() for ln in out.splitlines() if ln.strip()}
    assert lines["dsp"][1] == "no" and lines["rdsp"][1] == "yes"


def test_analyze_dsp_pair_satisfies_rol(tmp_path, capsys):
    # B is invertible and (AB)† = B⁻¹A† = (1/4)·ones, so the reverse order law holds
    a = _write(tmp_path, "a.json", [[1, 0], [1, 0]])
    b = _write(tmp_path, "b.json", [[1, 1], [1, -1]])
    code, out, _ = _run(capsys, ["analyze", a, b, "--output", "json"])
    rep = json.loads(out)
    assert code == EXIT_OK and rep["subtractivity"]["dsp"] and rep["rol"]["rol_holds"]


def test_analyze_equal_pair(tmp_path, capsys):
    a = _write(tmp_path, "a.json", [[1, 2], [3, 4]])
    rep = json.loads(_run(capsys, ["analyze", a, a, "--output", "json"])[1])
    for rel in ("space", "star", "minus", "diamond", "sharp"):
        assert rep["orders"]["verdicts"][rel]["holds"], rel
    assert rep["subtractivity"]["dsp"] and rep["rol"]["rol_holds"] is not None


def test_analyze_json_round_trip(tmp_path, capsys):
    a = _write(tmp_path, "a.json", [[1, 1, 0], [1, 1, 0], [0, 0, 0]])
    b = _write(tmp_path, "b.json", [[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    out = _run(capsys, ["analyze", a, b, "--output", "json"])[1]
    data = json.loads(out)
    assert AnalysisReport.from_json(data).to_json() == data


def test_every_corpus_instance_analyzes_with_exit_zero(tmp_path, capsys):
    for inst in load_corpus():
        pa, pb = tmp_path / "a.json", tmp_path / "b.json"
        pa.write_text(json.dumps(matrix_to_json(inst.a)))
        pb.write_text(json.dumps(matrix_to_json(inst.b)))
        assert _run(capsys, ["analyze", str(pa), str(pb)])[0] == EXIT_OK, inst.name


def test_analyze_shape_mismatch(tmp_path, capsys):
    a = _write(tmp_path, "a.json", np.eye(2))
    b = _write(tmp_path, "b.json", np.eye(3))
    code, _, err = _run(capsys, ["analyze", a, b])
    assert code == EXIT_INVALID and err.startswith("pseudoinv: error:")


def test_pinv_prints_quarter(tmp_path, capsys):
    a = _write(tmp_path, "a.json", [[1, 1], [1, 1]])
    code, out, _ = _run(capsys, ["pinv", a])
    assert code == EXIT_OK and out.count("1/4") == 4
    code, out, _ = _run(capsys, ["pinv", a, "--output", "json"])
    np.testing.assert_allclose(matrix_from_json(json.loads(out)), 0.25 * np.ones((2, 2)), atol=1e-12)


def test_group_inverse(tmp_path, capsys):
    ok = _write(tmp_path, "t.json", [[2, 1], [0, 0]])
    code, out, _ = _run(capsys, ["group-inverse", ok, "--output", "json"])
    x = matrix_from_json(json.loads(out))
    t = np.array([[2.0, 1], [0, 0]])
    assert code == EXIT_OK and np.allclose(t @ x, x @ t) and np.allclose(t @ x @ t, t)
    bad = _write(tmp_path, "n.json", [[0, 1], [0, 0]])
    code, _, err = _run(capsys, ["group-inverse", bad])
    assert code == EXIT_INVALID and "group invertible" in err


@pytest.mark.parametrize("content", ["not json", '{"rows": 2, "cols": 2, "entries": [1]}'])
def test_bad_matrix_file(tmp_path, capsys, content):
    p = tmp_path / "m.json"
    p.write_text(content)
    code, out, err = _run(capsys, ["pinv", str(p)])
    assert code == EXIT_INVALID and out == "" and "error" in err


def test_missing_file(capsys):
    assert _run(capsys, ["pinv", "/nonexistent/m.json"])[0] == EXIT_INVALID


def test_usage_errors(capsys):
    assert main([]) == EXIT_INVALID
    assert main(["theorems", "--dims", "5..2"]) == EXIT_INVALID
    assert main(["theorems", "--trials", "-1"]) == EXIT_INVALID
    assert main(["pinv", "x", "--tol-eq", "0"]) == EXIT_INVALID
    assert _run(capsys, ["theorems", "--claim", "nope"])[0] == EXIT_INVALID
    assert _run(capsys, ["fuzz", "nope"])[0] == EXIT_INVALID


def test_parse_dims():
    assert parse_dims("2..6") == (2, 6)
    assert parse_dims("3") == (3, 3)
    for bad in ("6..2", "a..b", "0..2", "2-6"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_dims(bad)


def test_seed_fallback(monkeypatch):
    monkeypatch.delenv("PSEUDOINV_SEED", raising=False)
    assert resolve_seed(None) == 0
    monkeypatch.setenv("PSEUDOINV_SEED", "42")
    assert resolve_seed(None) == 42 and resolve_seed(3) == 3


def test_invalid_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("PSEUDOINV_SEED", "seven")
    code, _, err = _run(capsys, ["theorems", "--trials", "1", "--claim", "star_implies_dsp"])
    assert code == EXIT_INVALID and "PSEUDOINV_SEED" in err


def test_env_seed_matches_flag(monkeypatch, capsys):
    argv = ["theorems", "--trials", "5", "--claim", "greville_iff_rol", "--output", "json",
            "--corpus", "/dev/null"]
    monkeypatch.setenv("PSEUDOINV_SEED", "9")
    via_env = _run(capsys, argv)[1]
    monkeypatch.delenv("PSEUDOINV_SEED")
    via_flag = _run(capsys, argv + ["--seed", "9"])[1]
    assert via_env == via_flag


def test_theorems_pass_and_fail(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    base = ["theorems", "--trials", "10", "--dims", "2..4", "--corpus", str(empty)]
    code, out, _ = _run(capsys, base + ["--claim", "star_implies_dsp", "--claim", "greville_iff_rol"])
    assert code == EXIT_OK and "suite: PASS" in out and "exercised" in out
    code, out, _ = _run(capsys, base + ["--claim", "minus_implies_star"])
    assert code == EXIT_VIOLATION and "violation minus_implies_star" in out


def test_theorems_json_schema(capsys):
    code, out, _ = _run(capsys, ["theorems", "--trials", "3", "--claim", "star_implies_dsp",
                                 "--output", "json", "--corpus", "/dev/null"])
    data = json.loads(out)
    assert code == EXIT_OK and data["passed"]
    assert {"theorem_id", "trials", "exercised", "violations"} <= set(data["theorems"][0])


def test_corpus_command(capsys, tmp_path):
    code, out, _ = _run(capsys, ["corpus"])
    assert code == EXIT_VIOLATION and "confirmed" in out
    good = tmp_path / "good.json"
    good.write_text(json.dumps([i.to_json() for i in load_corpus() if not i.errata]))
    assert _run(capsys, ["corpus", "--corpus", str(good)])[0] == EXIT_OK


def test_fuzz_command(capsys):
    code, out, _ = _run(capsys, ["fuzz", "minus_implies_star", "--trials", "100"])
    assert code == EXIT_VIOLATION and "counterexample" in out
    code, out, _ = _run(capsys, ["fuzz", "star_implies_minus", "--trials", "50", "--output", "json"])
    assert code == EXIT_OK and json.loads(out)["counterexample"] is None

import json
import subprocess
import sys
from pathlib import Path

import pytest

from semitotal import cli, families, verify
from semitotal.config import ENV_GUARDRAIL, Guardrails
from semitotal.families import FamilyCensus
from semitotal.graph_core import canonical_form, parse_graph6, path, to_edge_list, to_graph6
from semitotal.verify import (
    VerificationReport,
    check_bound,
    check_chain,
    check_extremal,
    check_family_T_soundness,
    check_gamma_eq,
    replay_violation,
)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p5_file(tmp_path):
    f = tmp_path / "p5.txt"
    f.write_text(to_edge_list(path(5)))
    return f


def test_solve_p5_edge_list(capsys, p5_file):
    code, out, _ = run(capsys, "solve", str(p5_file), "--format", "json")
    assert code == 0
    values = {k: v["value"] for k, v in json.loads(out)["results"].items()}
    assert values == {"gamma": 2, "gamma-t2": 2, "gamma-t": 3}


def test_solve_p6_graph6_both_methods(capsys, tmp_path):
    f = tmp_path / "p6.g6"
    f.write_bytes(to_graph6(path(6)) + b"\n")
    for method in ("dp", "oracle"):
        code, out, _ = run(capsys, "solve", str(f), "--method", method, "--format", "json")
        assert code == 0
        values = {k: v["value"] for k, v in json.loads(out)["results"].items()}
        assert values == {"gamma": 2, "gamma-t2": 3, "gamma-t": 4}


def test_solve_almost_parameter(capsys, tmp_path):
    f = tmp_path / "p4.g6"
    f.write_text("Ch\n")
    code, out, _ = run(capsys, "solve", str(f), "--params", "gamma-almost:0,gamma-almost:1")
    assert code == 0
    assert "gamma-almost:0 = 1" in out and "gamma-almost:1 = 2" in out


@pytest.mark.parametrize(
    "content, params, expected",
    [
        ("C!!\n", None, 2),
        ("Ch\n", "gamma-x", 2),
        ("Ch\n", "gamma-almost:9", 2),
        ("3\n0 1\nfoo\n", None, 2),
        ("C~\n", None, 3),
        ("3\n0 1\n1 2\n0 2\n", None, 3),
        ("1\n", None, 3),
    ],
)
def test_solve_error_exit_codes(capsys, tmp_path, content, params, expected):
    f = tmp_path / "in.txt"
    f.write_text(content)
    argv = ["solve", str(f)] + (["--params", params] if params else [])
    code, _, err = run(capsys, *argv)
    assert code == expected
    assert err.startswith("error:")


def test_missing_file_is_input_error(capsys, tmp_path):
    code, _, _ = run(capsys, "solve", str(tmp_path / "nope.g6"))
    assert code == 2


def test_verify_bound_examples(capsys):
    code, out, _ = run(capsys, "verify-bound", "--n-max", "8", "--jobs", "1", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["violations"] == [] and report["passed"]
    assert report["per_order"]["5"]["extremal"] == ["DkC"]
    assert check_bound(4, jobs=1).per_order[4]["extremal"] == []
    assert all(not v["extremal"] for v in check_bound(4, jobs=1).per_order.values())


def test_verify_extremal_examples():
    rep = check_extremal(10, jobs=1)
    assert rep.passed
    assert len(rep.per_order[5]["extremal"]) == 1
    h1 = families.apply_TO2(families.base_p5(), 0).tree
    assert canonical_form(h1) in {canonical_form(parse_graph6(g)) for g in rep.per_order[10]["extremal"]}
    present = [n for n in range(2, 10) if rep.per_order[n]["extremal"]]
    assert present == [5, 6, 7, 8, 9]


def test_verify_gamma_eq_examples():
    rep = check_gamma_eq(5, jobs=1)
    assert rep.passed
    assert rep.per_order[4]["gamma_equal"] == 1
    assert rep.per_order[5]["gamma_equal"] == 2


def test_guardrail_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, "--guardrail-n", "6", "verify-chain", "--n-max", "8")
    assert code == 4 and "guardrail" in err
    monkeypatch.setenv(ENV_GUARDRAIL, "5")
    assert run(capsys, "enumerate", "7")[0] == 4
    assert Guardrails.from_env().enumeration_n == 5


def test_json_is_deterministic_across_runs_and_jobs(capsys):
    outputs = []
    for jobs in ("1", "1", "2"):
        code, out, _ = run(capsys, "verify-chain", "--n-max", "9", "--jobs", jobs, "--format", "json")
        assert code == 0
        report = json.loads(out)
        report.pop("timing")
        report["config"].pop("jobs", None)
        outputs.append(json.dumps(report, sort_keys=True))
    assert outputs[0] == outputs[1] == outputs[2]


def test_report_file_is_written(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify-leaf-free", "--n-max", "7", "--jobs", "1", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["check"] == "verify-leaf-free" and data["trees_examined"] == 1 + 1 + 2 + 3 + 6 + 11
    assert not (tmp_path / "r.json.tmp").exists()


def test_on_order_streams_partial_reports():
    seen = []
    check_chain(7, jobs=1, on_order=lambda rep, n: seen.append((n, rep.trees_examined)))
    assert seen == [(2, 1), (3, 2), (4, 4), (5, 7), (6, 13), (7, 24)]


def test_violations_exit_one_and_replay(capsys, monkeypatch):
    # drop P5 and Y from the family-O census: both become reported violations
    real = families.generate_family_O

    def lossy(n_max, *, limits=None):
        census = real(n_max, limits=limits)
        census.codes[5] = set()
        return census

    monkeypatch.setattr(verify, "generate_family_O", lossy)
    code, out, _ = run(capsys, "verify-gamma-eq", "--n-max", "6", "--jobs", "1", "--format", "json")
    report = json.loads(out)
    assert code == 1 and not report["passed"]
    assert len(report["violations"]) == 2
    assert all(v["predicate"] == "equal-not-in-family" for v in report["violations"])
    assert all(replay_violation(v) for v in report["violations"])
    monkeypatch.undo()
    assert not any(replay_violation(v) for v in report["violations"])


def test_replay_rejects_non_violations():
    g6 = to_graph6(path(5)).decode()
    for pred in ("bound", "chain", "oracle", "leaf-free", "labeling",
                 "extremal-not-in-family", "family-member-not-extremal",
                 "equal-not-in-family", "family-member-not-equal"):
        assert not replay_violation({"graph6": g6, "predicate": pred})
    assert not replay_violation({"graph6": g6, "predicate": "family-T-soundness", "status": "CABAC"})
    assert replay_violation({"graph6": g6, "predicate": "family-T-soundness", "status": "AAAAA"})
    with pytest.raises(ValueError):
        replay_violation({"graph6": g6, "predicate": "nonsense"})


def test_family_T_soundness_small():
    rep = check_family_T_soundness(12)
    assert rep.passed and rep.trees_examined == len(families.generate_family_T(12).labeled)


def test_report_round_trip_fields():
    rep = VerificationReport("x", (2, 3), trees_examined=3, timing={"elapsed_seconds": 1.0})
    d = json.loads(rep.to_json(timing=False))
    assert "timing" not in d and d["passed"] and d["order_range"] == [2, 3]
    assert rep.summary() == "x: orders 2..3, 3 trees, PASS"


def test_generate_outputs(capsys, tmp_path):
    out = tmp_path / "t5.g6"
    assert run(capsys, "generate", "T", "--n-max", "5", "--out", str(out))[0] == 0
    assert [canonical_form(parse_graph6(g)) for g in out.read_text().split()] == [canonical_form(path(5))]
    out = tmp_path / "t4.g6"
    assert run(capsys, "generate", "T", "--n-max", "4", "--out", str(out))[0] == 0
    assert out.read_text() == ""
    assert set(json.loads((tmp_path / "t4.g6.json").read_text())["counts"].values()) == {0}
    out = tmp_path / "o4.g6"
    assert run(capsys, "generate", "O", "--n-max", "4", "--out", str(out))[0] == 0
    assert [canonical_form(parse_graph6(g)) for g in out.read_text().split()] == [canonical_form(path(4))]


def test_generate_is_sorted_and_labeled(capsys, tmp_path):
    out = tmp_path / "t11.g6"
    assert run(capsys, "generate", "T", "--n-max", "11", "--out", str(out), "--labeled")[0] == 0
    trees = [parse_graph6(line) for line in out.read_text().split()]
    keys = [(t.n, canonical_form(t)) for t in trees]
    assert keys == sorted(keys) and len(trees) == 19
    rows = (tmp_path / "t11.g6.labeled.jsonl").read_text().splitlines()
    assert len(rows) == len(families.generate_family_T(11).labeled)
    for row in rows:
        assert families.labeling_violations(families.LabeledTree.from_json(row)) == []
    meta = json.loads((tmp_path / "t11.g6.json").read_text())
    assert meta["counts"]["11"] == 6 and meta["family"] == "T"


@pytest.mark.parametrize("n, lines", [(4, 2), (7, 11), (1, 1)])
def test_enumerate_line_counts(capsys, n, lines):
    code, out, _ = run(capsys, "enumerate", str(n))
    assert code == 0 and len(out.split()) == lines


def test_census_counts_cover_every_order():
    census = FamilyCensus("T", 3)
    assert census.counts() == {1: 0, 2: 0, 3: 0}


def test_sweep_script_smoke(tmp_path):
    script = Path(__file__).resolve().parents[1] / "scripts" / "run_sweeps.py"
    proc = subprocess.run([sys.executable, str(script), "--out", str(tmp_path), "--scale", "0.4",
                           "--jobs", "1", "--only", "bound", "chain"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["passed"] == {"bound": True, "chain": True}

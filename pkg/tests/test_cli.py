"""CLI behavior: exit codes, JSON determinism, emit round trips."""

import json
import os
import subprocess
import sys

from conftest import FIXTURES

SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def run_cli(*args, **kw):
    env = os.environ.copy()
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [SRC, env.get("PYTHONPATH", "")]))
    return subprocess.run(
        [sys.executable, "-m", "orbitrank.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        **kw,
    )


def test_analyze_axb_success():
    res = run_cli("analyze", "catalog:axb", "--json", "-")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["invariants"] == {
        "real_rank": 1,
        "stable_rank": 2,
        "hypothesis": "exponential (heuristic)",
    }
    assert report["coadjoint"]["p_polynomial"] == "xi_Y^2"
    assert report["projections"]["verdict"] == "exists_open_orbits"
    assert report["inference"]["agreement"] is True
    assert set(report) == {
        "algebra", "structure", "exponentiality", "invariants",
        "coadjoint", "projections", "inference",
    }


def test_analyze_oscillator_refused():
    res = run_cli("analyze", "catalog:oscillator", "--json", "-")
    assert res.returncode == 2
    report = json.loads(res.stdout)
    assert report["invariants"]["refused"]["reason"] == "NotExponential"
    assert report["invariants"]["refused"]["witness"] == ["1", "0", "0", "0"]
    assert report["exponentiality"]["status"] == "certified_no"


def test_analyze_sl2_not_solvable():
    res = run_cli("analyze", "catalog:sl2", "--json", "-")
    assert res.returncode == 2
    report = json.loads(res.stdout)
    assert report["exponentiality"]["refused"]["reason"] == "NotSolvable"
    assert report["structure"]["solvable"] is False
    assert report["coadjoint"]["p_polynomial"] == "0"


def test_analyze_bad_file_exit_1(tmp_path):
    bad = tmp_path / "bad.lie"
    bad.write_text("lie 1\ndim 2\nbasis X\n")
    res = run_cli("analyze", str(bad))
    assert res.returncode == 1
    assert "error:" in res.stderr


def test_json_bytes_deterministic():
    a = run_cli("analyze", "catalog:direct_sum:axb+axb", "--samples", "50", "--json", "-")
    b = run_cli("analyze", "catalog:direct_sum:axb+axb", "--samples", "50", "--json", "-")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_emit_then_analyze_matches_catalog(tmp_path):
    emitted = tmp_path / "h1.lie"
    res = run_cli("catalog", "emit", "heisenberg:1", "--out", str(emitted))
    assert res.returncode == 0
    from_file = run_cli("analyze", str(emitted), "--json", "-")
    from_name = run_cli("analyze", "catalog:heisenberg:1", "--json", "-")
    assert from_file.stdout == from_name.stdout
    assert from_file.returncode == from_name.returncode == 0


def test_validate_ok_and_broken():
    ok = run_cli("validate", os.path.join(FIXTURES, "axb.lie"))
    assert ok.returncode == 0 and "ok:" in ok.stdout
    broken = run_cli("validate", os.path.join(FIXTURES, "filiform4_broken.lie"))
    assert broken.returncode == 1
    assert "Jacobi" in broken.stderr and "(0,1,2)" in broken.stderr


def test_infer_toeplitz():
    res = run_cli("infer", os.path.join(FIXTURES, "toeplitz.filt"))
    assert res.returncode == 0
    assert "total: rr=[1,1] tsr=[2,2]" in res.stdout
    assert "R17" in res.stdout


def test_infer_json_facts():
    res = run_cli("infer", os.path.join(FIXTURES, "nilpotent_special.filt"), "--json", "-")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["facts"]["total"]["rr"] == [3, 3]


def test_infer_no_compacts_flag():
    res = run_cli("infer", os.path.join(FIXTURES, "toeplitz.filt"), "--no-compacts-facts")
    assert res.returncode == 0
    assert "R17" not in res.stdout


def test_infer_json_document(tmp_path):
    doc = tmp_path / "point.json"
    doc.write_text(
        '{"filtration": 1, "nodes": [{"name": "only", '
        '"attrs": {"kind": "commutative", "spectrum_dim": 0, "spectrum_compact": true}}]}'
    )
    res = run_cli("infer", str(doc))
    assert res.returncode == 0
    assert "total: rr=[0,0] tsr=[1,1]" in res.stdout


def test_infer_contradictory_doc_exit_1(tmp_path):
    doc = tmp_path / "bad.filt"
    doc.write_text(
        "filtration 1\nnode only\nattr kind = commutative\nattr spectrum_dim = 0\n"
        "attr spectrum_compact = false\nattr no_compact_spectrum_component = true\n"
    )
    res = run_cli("infer", str(doc))
    assert res.returncode == 1
    assert "rule" in res.stderr


def test_not_simply_connected_bound():
    res = run_cli("analyze", "catalog:abelian:1", "--not-simply-connected", "--json", "-")
    assert res.returncode == 2
    report = json.loads(res.stdout)
    assert report["invariants"]["real_rank_upper_bound"] == 1
    assert report["invariants"]["upper_bound_possibly_strict"] is True


def test_assume_exponential_override():
    res = run_cli("analyze", "catalog:oscillator", "--assume-exponential", "--json", "-")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["exponentiality"] == {"status": "asserted"}
    assert report["invariants"]["real_rank"] == 1
    assert report["invariants"]["hypothesis"] == "exponential (asserted)"


def test_batch_analyze_order_and_exit():
    res = run_cli("analyze", "catalog:axb", "catalog:oscillator", "--json", "-")
    assert res.returncode == 2
    reports = json.loads(res.stdout)
    assert isinstance(reports, list) and len(reports) == 2
    assert reports[0]["algebra"]["basis"] == ["X", "Y"]
    assert reports[1]["algebra"]["basis"] == ["H", "P", "Q", "E"]


def test_seed_recorded_in_report():
    res = run_cli("analyze", "catalog:axb", "--seed", "7", "--samples", "50", "--json", "-")
    report = json.loads(res.stdout)
    assert report["coadjoint"]["component_estimate"]["seed"] == 7
    assert report["exponentiality"]["seed"] == 7

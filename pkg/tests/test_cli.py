import json
import subprocess
import sys

import pytest

from laguerre_dd.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_q4_case_i(capsys, tmp_path):
    out_path = tmp_path / "design.json"
    code, out, _ = run_cli(
        capsys, "construct", "--p", "2", "--n", "2", "--i", "1", "--case", "i",
        "--out", str(out_path),
    )
    assert code == 0
    assert "3-(4,3,1) DD with 20 points, 640 blocks" in out
    doc = json.loads(out_path.read_text())
    assert doc["params"] == {"t": 3, "s": 4, "k": 3, "lambda": 1, "v": 20, "b": 640}
    assert len(doc["blocks"]) == 640
    assert doc["case"] == "i" and doc["i"] == 1


def test_construct_superharmonic_long(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "--p", "3", "--n", "2", "--i", "2", "--case", "v",
        "--variant", "superharmonic",
    )
    assert code == 0
    assert "3-(9,6,5) DD" in out


def test_construct_rejects_violated_condition(capsys):
    code, _, err = run_cli(capsys, "construct", "--p", "2", "--n", "1", "--case", "ii")
    assert code == 2
    assert "p^i>2" in err


def test_construct_with_verify(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "--p", "3", "--n", "1", "--case", "i", "--verify"
    )
    assert code == 0
    assert "verification at t=3: PASS" in out
    assert "verification at t=2: PASS" in out


def test_construct_at_t2(capsys):
    code, out, _ = run_cli(capsys, "construct", "--p", "2", "--n", "2", "--case", "i", "--t", "2")
    assert code == 0
    assert "2-(4,3,12) DD with 20 points, 640 blocks" in out


def test_verify_roundtrip_and_mutation(capsys, tmp_path):
    out_path = tmp_path / "d.json"
    code, _, _ = run_cli(
        capsys, "construct", "--p", "2", "--n", "2", "--case", "i", "--out", str(out_path)
    )
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", str(out_path))
    assert code == 0
    assert "design valid" in out

    doc = json.loads(out_path.read_text())
    del doc["blocks"][0]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "verify", str(broken))
    assert code == 1
    assert "design INVALID" in out
    assert "0:" in out and "1:" in out  # two-key histogram is visible


def test_verify_writes_report_document(capsys, tmp_path):
    design_path = tmp_path / "d.json"
    report_path = tmp_path / "report.json"
    run_cli(capsys, "construct", "--p", "3", "--n", "1", "--case", "i", "--out", str(design_path))
    code, _, _ = run_cli(capsys, "verify", str(design_path), "--out", str(report_path))
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["passed"] is True
    assert [r["t"] for r in report["reports"]] == [3, 2]
    assert all(c["passed"] for r in report["reports"] for c in r["checks"])


def test_verify_rejects_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"not\": \"a design\"}")
    code, _, err = run_cli(capsys, "verify", str(bad))
    assert code == 2
    assert "error" in err or "invalid" in err


def load_table(capsys, tmp_path, *argv):
    out_path = tmp_path / "table.json"
    code, out, _ = run_cli(capsys, "table", *argv, "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    rows = {
        (r["case"], r["i"], r["variant"], r["block"]): r for r in doc["rows"]
    }
    return out, rows


def test_table_m8_rows(capsys, tmp_path):
    out, rows = load_table(capsys, tmp_path, "--p", "2", "--n", "3")
    assert {key[1] for key in rows} == {1, 3}
    picks = {
        ("i", 3, None, None): (9, 1),
        ("ii", 3, None, None): (8, 6),
        ("iii", 3, None, None): (7, 15),
        ("iv", 3, None, None): (6, 20),
        ("v", 3, "generic", "long"): (5, 15),
        ("v", 3, "generic", "short"): (4, 6),
    }
    for key, (k, lam) in picks.items():
        row = rows[key]
        assert row["included"]
        assert (row["k"], row["lambda3"]) == (k, lam)
    # m = 8 is even, so the harmonic family is excluded
    assert not rows[("v", 3, "harmonic", "long")]["included"]


def test_table_includes_and_excludes(capsys, tmp_path):
    out, rows = load_table(capsys, tmp_path, "--p", "3", "--n", "1")
    included = [key for key, r in rows.items() if r["included"]]
    # only cases i and ii survive at p^i = 3
    assert sorted(key[0] for key in included) == ["i", "ii"]
    assert "excluded (requires p^i>3)" in out
    assert "excluded (requires p^i>4)" in out


def test_table_equianharmonic_present_for_p7(capsys, tmp_path):
    _, rows = load_table(capsys, tmp_path, "--p", "7", "--n", "1")
    assert rows[("v", 1, "equianharmonic", "long")]["included"]
    assert rows[("v", 1, "equianharmonic", "short")]["included"]
    assert rows[("v", 1, "equianharmonic", "long")]["lambda3"] == 2
    assert not rows[("v", 1, "generic", "long")]["included"]  # 7 fails p^i>7


def test_table_check_columns(capsys, tmp_path):
    out, rows = load_table(capsys, tmp_path, "--p", "2", "--n", "2", "--check")
    header = next(l for l in out.splitlines() if l.startswith("case"))
    assert "stab(measured)" in header and "lambda3(verified)" in header
    row = rows[("i", 1, None, None)]
    assert row["stabilizer_measured"] == 6
    assert row["lambda3_verified"] == 1
    row2 = rows[("ii", 2, None, None)]
    assert row2["stabilizer_measured"] == 12
    assert row2["lambda3_verified"] == 2


@pytest.mark.parametrize(
    "p,n,i,tup",
    [(3, 2, 1, "(90, 9, 4, 1)"), (5, 1, 1, "(30, 5, 6, 1)"), (7, 1, 1, "(56, 7, 8, 1)")],
)
def test_compare_conic_equal(capsys, p, n, i, tup):
    code, out, _ = run_cli(
        capsys, "compare-conic", "--p", str(p), "--n", str(n), "--i", str(i)
    )
    assert code == 0
    assert out.count(tup) == 2
    assert "equal: true" in out


def test_compare_conic_even_q(capsys):
    code, out, _ = run_cli(capsys, "compare-conic", "--p", "2", "--n", "2")
    assert code == 2
    assert "not applicable: q even" in out


def test_verify_refuses_past_cap(capsys, tmp_path):
    path = tmp_path / "d.json"
    run_cli(capsys, "construct", "--p", "2", "--n", "2", "--case", "i", "--out", str(path))
    code, _, err = run_cli(capsys, "verify", str(path), "--cap", "10")
    assert code == 2
    assert "cap" in err and "smaller q" in err


def test_selfcheck_small(capsys):
    code, out, _ = run_cli(capsys, "selfcheck", "--max-q", "3")
    assert code == 0
    assert "FAIL" not in out
    assert "group_order" in out and "sharp_transitivity" in out


def test_selfcheck_output_is_byte_identical():
    from laguerre_dd.selfcheck import format_report, run_selfcheck

    first = format_report(run_selfcheck(3))
    second = format_report(run_selfcheck(3))
    assert first == second


def test_construct_output_is_byte_stable(tmp_path):
    args = [
        sys.executable, "-m", "laguerre_dd.cli", "construct",
        "--p", "3", "--n", "1", "--case", "i",
    ]
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        res = subprocess.run(
            args + ["--out", str(path)], capture_output=True, text=True
        )
        assert res.returncode == 0, res.stderr
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]

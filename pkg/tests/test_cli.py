import json
import os
import subprocess
import sys
from pathlib import Path

from dcsums import report_from_json
from dcsums.cli import main

SRC = Path(__file__).resolve().parents[1] / "src"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eulernum(capsys):
    code, out, _ = run_cli(capsys, "eulernum", "3")
    assert code == 0 and out == "1/4\n"


def test_bernoullinum(capsys):
    code, out, _ = run_cli(capsys, "bernoullinum", "2")
    assert code == 0 and out == "1/6\n"


def test_eulerpoly(capsys):
    code, out, _ = run_cli(capsys, "eulerpoly", "3")
    assert code == 0 and out == "x^3 - 3/2*x^2 + 1/4\n"


def test_eulerfn(capsys):
    code, out, _ = run_cli(capsys, "eulerfn", "3", "4/3")
    assert code == 0 and out == "-13/108\n"
    code, out, _ = run_cli(capsys, "eulerfn", "1", "-1/2")
    assert code == 0 and out == "0\n"


def test_dcsum(capsys):
    code, out, _ = run_cli(capsys, "dcsum", "3", "1", "3")
    assert code == 0 and out == "13/54\n"


def test_dedekind_and_gendedekind(capsys):
    code, out, _ = run_cli(capsys, "dedekind", "1", "3")
    assert code == 0 and out == "1/18\n"
    code, out, _ = run_cli(capsys, "gendedekind", "1", "1", "3")
    assert code == 0 and out == "1/18\n"


def test_precondition_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "dedekind", "2", "4")
    assert code == 2
    assert "coprime" in err


def test_usage_errors_exit_2(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "eulernum")[0] == 2
    assert run_cli(capsys, "eulernum", "-3")[0] == 2
    assert run_cli(capsys, "eulerfn", "3", "not-a-number")[0] == 2
    assert run_cli(capsys, "audit", "--checks", "thm42")[0] == 2


def test_help_exits_0(capsys):
    assert run_cli(capsys, "--help")[0] == 0


def test_umbral_forms(capsys):
    code, out, _ = run_cli(
        capsys, "umbral", "--form", "hEkE", "--p", "3", "--h", "1", "--k", "3"
    )
    assert code == 0 and out == "7\n"
    code, out, _ = run_cli(capsys, "umbral", "--form", "Ex", "--p", "3", "--x", "1/3")
    assert code == 0 and out == "13/108\n"
    code, out, _ = run_cli(
        capsys, "umbral", "--form", "thm9rhs", "--p", "3", "--h", "1", "--k", "3"
    )
    assert code == 0 and out == "-67/4\n"
    assert run_cli(capsys, "umbral", "--form", "Ex", "--p", "3")[0] == 2


def test_checks_lists_registry(capsys):
    code, out, _ = run_cli(capsys, "checks")
    ids = out.split()
    assert code == 0
    assert "thm8_periodic" in ids and "lemma1_printed" in ids
    assert ids == sorted(ids)


def test_audit_failing_check_exits_1_with_residual_in_json(capsys):
    code, out, _ = run_cli(
        capsys, "audit", "--checks", "lemma1_printed", "--p", "1", "--format", "json"
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["results"] == [
        {
            "id": "lemma1_printed",
            "params": {"p": 1},
            "lhs": "1/12",
            "rhs": "0",
            "residual": "1/12",
            "holds": False,
            "skipped": False,
        }
    ]
    assert payload["summary"]["lemma1_printed"] == {"pass": 0, "fail": 1, "skip": 0}


def test_audit_passing_checks_exit_0(capsys):
    code, out, _ = run_cli(
        capsys,
        "audit",
        "--checks",
        "dedekind_recip,eq7_corrected",
        "--hmax",
        "6",
        "--kmax",
        "6",
        "--nmax",
        "6",
        "--lmax",
        "4",
        "--format",
        "text",
    )
    assert code == 0
    assert "all checks hold" in out


def test_audit_json_round_trip_and_csv_parity(capsys):
    args = [
        "audit",
        "--checks",
        "thm8_periodic,thm9,dedekind_recip",
        "--pmax",
        "3",
        "--hmax",
        "5",
        "--kmax",
        "5",
        "--odd-only",
        "--coprime-only",
    ]
    code_json, out_json, _ = run_cli(capsys, *args, "--format", "json")
    code_csv, out_csv, _ = run_cli(capsys, *args, "--format", "csv")
    assert code_json == code_csv == 1  # thm9 leaves nonzero residuals

    report = report_from_json(out_json)
    payload = json.loads(out_json)
    assert len(report.results) == len(payload["results"])

    csv_lines = out_csv.strip().splitlines()
    assert csv_lines[0].startswith("id,p,h,k,n,l,m,s,lhs,rhs,residual")
    assert len(csv_lines) - 1 == len(payload["results"])
    # Same (id, params) in the same order in both encodings.
    for line, entry in zip(csv_lines[1:], payload["results"]):
        cells = line.split(",")
        assert cells[0] == entry["id"]
        params = entry["params"]
        expected = [
            str(params[name]) if name in params else ""
            for name in ("p", "h", "k", "n", "l", "m", "s")
        ]
        assert cells[1:8] == expected


def test_audit_is_byte_deterministic(capsys):
    args = [
        "audit", "--checks", "thm3,eq11", "--pmax", "5", "--mmax", "7",
        "--odd-only", "--format", "json",
    ]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_audit_out_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "audit", "--checks", "dedekind_recip", "--hmax", "4", "--kmax", "4",
        "--format", "json", "--out", str(out_path),
    )
    assert code == 0 and out == ""
    report = report_from_json(out_path.read_text(encoding="utf-8"))
    assert report.summary["dedekind_recip"]["fail"] == 0


def test_worker_env_does_not_change_output(capsys, monkeypatch):
    args = [
        "audit", "--checks", "thm8_periodic", "--pmax", "3", "--hmax", "5",
        "--kmax", "5", "--odd-only", "--format", "json",
    ]
    monkeypatch.delenv("DCSUM_THREADS", raising=False)
    _, serial, _ = run_cli(capsys, *args)
    monkeypatch.setenv("DCSUM_THREADS", "4")
    _, threaded, _ = run_cli(capsys, *args)
    assert serial == threaded


def test_module_entry_point_end_to_end():
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "dcsums", "dcsum", "3", "1", "3"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == "13/54\n"

    proc = subprocess.run(
        [sys.executable, "-m", "dcsums", "dedekind", "2", "4"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 2
    assert proc.stdout == ""

import csv
import io
import json
import subprocess
import sys

import pytest

from chromcomp.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, run
from chromcomp.report import AnalysisReport


def test_analyze_json_roundtrip():
    code, out = run(["analyze", "--family", "cycle", "--n", "6", "--json"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert (data["chi"], data["zeta"]) == (2, 3)
    assert data["stability"]["is_scc"] is True
    assert (data["jcoloring"]["j_number"], data["jcoloring"]["zeta_j"]) == (3, 6)
    rep = AnalysisReport.from_json(data)
    rep.check()
    assert rep.to_json() == data


def test_analyze_is_deterministic_and_timing_opt_in():
    a = run(["analyze", "--g6", "D}_", "--json"])
    b = run(["analyze", "--g6", "D}_", "--json"])
    assert a == b
    assert "timing" not in json.loads(a[1])
    code, out = run(["analyze", "--g6", "D}_", "--json", "--timing"])
    assert set(json.loads(out)["timing"]) == {"zeta", "bounds", "scc", "jcoloring"}


def test_analyze_text_output():
    code, out = run(["analyze", "--g6", "C~"])
    assert code == EXIT_OK
    assert "zeta: 0" in out and "chi: 4" in out


def test_analyze_from_dimacs_file(tmp_path):
    f = tmp_path / "p4.col"
    f.write_text("c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    code, out = run(["zeta", str(f), "--json"])
    assert code == EXIT_OK
    assert json.loads(out)["zeta"] == 1


def test_analyze_cap_refusal_and_bounds_only():
    code, _ = run(["analyze", "--family", "cycle", "--n", "14"])
    assert code == EXIT_CAP
    code, out = run(["analyze", "--family", "cycle", "--n", "14", "--bounds-only", "--json"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["zeta"] is None and data["bounds"]["complement"] == 77


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("CHROMA_MAX_ORDER", "13")
    code, out = run(["zeta", "--family", "cycle", "--n", "13", "--json"])
    assert code == EXIT_OK and json.loads(out)["zeta"] == 43


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--g6", "D?"],
        ["analyze", "--g6", "C\x7f"],
        ["generate", "--family", "random", "--n", "5"],
        ["generate", "--family", "cycle", "--n", "2"],
        ["analyze"],
        ["nonsense"],
    ],
)
def test_input_errors_exit_1(argv, capsys):
    # argparse usage errors leave through SystemExit, everything else returns
    try:
        code, _ = run(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_INPUT


def test_parse_error_names_offset(capsys):
    run(["analyze", "--g6", "D?"])
    assert "byte" in capsys.readouterr().err


def test_generate_formats():
    assert run(["generate", "--family", "complete", "--n", "4"]) == (EXIT_OK, "C~\n")
    code, out = run(["generate", "--family", "path", "--n", "3", "--out-format", "dimacs"])
    assert "p edge 3 2" in out
    a = run(["generate", "--family", "random", "--n", "8", "--seed", "1"])
    assert a == run(["generate", "--family", "random", "--n", "8", "--seed", "1"])


def test_bounds_scc_jcolor_commands():
    code, out = run(["bounds", "--family", "cycle", "--n", "5", "--exact", "--json"])
    assert json.loads(out) == {"complement": 5, "lucky": 3, "near_lucky": 3, "zeta_exact": 3}
    code, out = run(["scc", "--family", "paw", "--json"])
    assert json.loads(out)["is_scc"] is False
    code, out = run(["jcolor", "--family", "cycle", "--n", "5", "--json"])
    assert json.loads(out)["exists"] is False


def test_census_small(tmp_path):
    code, out = run(["census", "--n", "3"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 8
    summary = tmp_path / "s.json"
    code, out = run(["census", "--n", "4", "--connected", "--json", "--summary", str(summary)])
    assert code == EXIT_OK
    assert len(out.splitlines()) == 38
    assert json.loads(summary.read_text())["theorem_failures"] == 0


def test_census_failure_exits_3_after_writing_records(tmp_path):
    out_file = tmp_path / "c5.csv"
    code, _ = run(["census", "--n", "5", "--connected", "--out", str(out_file)])
    assert code == EXIT_VIOLATION
    assert len(out_file.read_text().splitlines()) == 729


def test_census_cap():
    assert run(["census", "--n", "9"])[0] == EXIT_CAP


def test_census_threads_match_serial():
    assert run(["census", "--n", "4", "--threads", "2"]) == run(["census", "--n", "4"])


def test_conjecture_random_and_exhaustive(capsys):
    code, out = run(["conjecture", "--pairs", "random", "--count", "10", "--seed", "1", "--n-max", "4"])
    assert code == EXIT_OK
    assert len(out.splitlines()) == 11
    assert "COUNTEREXAMPLES:" in capsys.readouterr().err
    assert run(["conjecture", "--pairs", "random", "--count", "10", "--seed", "1", "--n-max", "4"])[1] == out
    code, out = run(["conjecture", "--pairs", "exhaustive", "--n-max", "2", "--json"])
    assert json.loads(out)["summary"]["pairs"] == 6
    assert run(["conjecture", "--pairs", "random", "--count", "3"])[0] == EXIT_INPUT


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chromcomp", "zeta", "--g6", "C~", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["zeta"] == 0

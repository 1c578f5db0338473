"""Command-line surface: exit codes, file formats, report determinism."""

import json

from catorient.cli import main
from catorient.io import parse_result
from catorient.model import verify_antimagic
from catorient.sweep import CSV_COLUMNS


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


def test_construct_verify_round_trip(tmp_path, capsys):
    instance = write(tmp_path, "inst.json", {"p": 6, "k": 3, "legs": [2, 2, 5]})
    out = str(tmp_path / "result.json")
    assert main(["construct", instance, "--out", out]) == 0
    spec, lo = parse_result((tmp_path / "result.json").read_text())
    assert spec.m == 15
    assert verify_antimagic(spec, lo) is None
    assert main(["verify", out]) == 0
    assert "PASS" in capsys.readouterr().out


def test_construct_writes_json_with_15_arcs(tmp_path, capsys):
    instance = write(tmp_path, "inst.json", {"p": 6, "k": 3, "legs": [2, 2, 5]})
    assert main(["construct", instance]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["edges"]) == 15


def test_construct_dot_format(tmp_path, capsys):
    instance = write(tmp_path, "inst.json", {"p": 6, "k": 3, "legs": [2, 2, 5]})
    assert main(["construct", instance, "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("->") == 15


def test_construct_unsupported_shape(tmp_path):
    instance = write(tmp_path, "inst.json", {"p": 5, "k": 1, "legs": [2]})
    assert main(["construct", instance]) == 2


def test_construct_invalid_instance(tmp_path, capsys):
    instance = write(tmp_path, "inst.json", {"p": 0, "k": 2, "legs": []})
    assert main(["construct", instance]) == 1
    assert "p" in capsys.readouterr().err
    missing = write(tmp_path, "missing.json", {"p": 4, "k": 2})
    assert main(["construct", missing]) == 1


def test_construct_budget_failure(tmp_path):
    instance = write(tmp_path, "inst.json", {"p": 6, "k": 3, "legs": [2, 2, 5]})
    assert main(["construct", instance, "--budget", "1"]) == 3


def test_verify_flags_duplicate_sum(tmp_path, capsys):
    # hand-built two-edge path with sums (-1, -1, 2)
    doc = {
        "spec": {"p": 2, "k": 1, "legs": []},
        "edges": [
            {"edge": {"type": "spine", "index": 0}, "direction": "forward", "label": 1},
            {"edge": {"type": "spine", "index": 1}, "direction": "forward", "label": 2},
        ],
    }
    path = write(tmp_path, "bad.json", doc)
    assert main(["verify", path]) == 4
    out = capsys.readouterr().out
    assert "DuplicateSum" in out and "-1" in out


def test_verify_flags_label_zero(tmp_path, capsys):
    doc = {
        "spec": {"p": 2, "k": 1, "legs": []},
        "edges": [
            {"edge": {"type": "spine", "index": 0}, "direction": "forward", "label": 0},
            {"edge": {"type": "spine", "index": 1}, "direction": "backward", "label": 2},
        ],
    }
    path = write(tmp_path, "bad.json", doc)
    assert main(["verify", path]) == 4
    assert "NotBijection" in capsys.readouterr().out


def test_verify_malformed_file(tmp_path):
    path = write(tmp_path, "junk.json", "not json at all")
    assert main(["verify", path]) == 1


def test_oracle_exit_codes(tmp_path):
    tiny = write(tmp_path, "tiny.json", {"p": 2, "k": 2, "legs": [1]})
    out = str(tmp_path / "oracle.json")
    assert main(["oracle", tiny, "--out", out]) == 0
    spec, lo = parse_result((tmp_path / "oracle.json").read_text())
    assert verify_antimagic(spec, lo) is None
    big = write(tmp_path, "big.json", {"p": 6, "k": 3, "legs": [2, 2, 5]})
    assert main(["oracle", big]) == 2
    limited = write(tmp_path, "lim.json", {"p": 4, "k": 2, "legs": [1, 3]})
    assert main(["oracle", limited, "--node-limit", "2"]) == 3


def test_sweep_single_row(tmp_path, capsys):
    assert main(["sweep", "--p-max", "2", "--k-max", "2", "--s-max", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 2
    assert "p2k2-1" in lines[1] and "Pass" in lines[1]


def test_sweep_reports_deterministic_across_jobs(tmp_path):
    base1 = str(tmp_path / "a" / "report")
    base2 = str(tmp_path / "b" / "report")
    args = ["sweep", "--p-max", "4", "--k-max", "3", "--s-max", "2"]
    assert main(args + ["--jobs", "1", "--report", base1]) == 0
    assert main(args + ["--jobs", "2", "--report", base2]) == 0
    for suffix in (".csv", ".json"):
        a = (tmp_path / "a" / f"report{suffix}").read_bytes()
        b = (tmp_path / "b" / f"report{suffix}").read_bytes()
        assert a == b
    report = json.loads((tmp_path / "a" / "report.json").read_text())
    assert report["summary"]["failed"] == 0
    assert all(row["elapsed_ms"] is None for row in report["rows"])


def test_sweep_timing_fills_elapsed(tmp_path):
    base = str(tmp_path / "timed")
    assert main(["sweep", "--p-max", "2", "--k-max", "2", "--s-max", "1",
                 "--report", base, "--timing"]) == 0
    report = json.loads((tmp_path / "timed.json").read_text())
    assert all(row["elapsed_ms"] is not None for row in report["rows"])

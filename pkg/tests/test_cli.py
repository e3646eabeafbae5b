from __future__ import annotations

import json
import subprocess
import sys

import pytest

from crossring.cli import main, run_fuzz
from crossring.drawing import read, to_json

from .helpers import DATA


def test_gen_canonical_then_certify(tmp_path, capsys):
    path = tmp_path / "c37.json"
    assert main(["gen-canonical", "--m", "3", "--n", "7", "-o", str(path)]) == 0
    assert read(path).num_crossings == 7
    assert main(["validate", str(path)]) == 0
    capsys.readouterr()
    out = tmp_path / "cert.json"
    assert main(["certify", str(path), "-o", str(out)]) == 0
    cert = json.loads(out.read_text(encoding="utf-8"))
    assert cert["total_crossings"] == 7 and cert["theorem1_holds"]


def test_analyze_prints_report(tmp_path, capsys):
    path = tmp_path / "c34.json"
    main(["gen-canonical", "--m", "3", "--n", "4", "-o", str(path)])
    assert main(["analyze", str(path)]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["relaxed"] is False


def test_invalid_drawing_exit_code(tmp_path):
    path = tmp_path / "bad.json"
    main(["gen-canonical", "--m", "3", "--n", "7", "-o", str(path)])
    data = json.loads(path.read_text(encoding="utf-8"))
    entry = data["edges"]["R:0:2"]["crossings"][0]
    other = entry["other"]
    flipped = "+" if entry["chirality"] != "+" else "−"
    entry["chirality"] = flipped
    for e in data["edges"][other]["crossings"]:
        e["chirality"] = flipped
    path.write_text(json.dumps(data), encoding="utf-8")
    assert main(["validate", str(path)]) == 1
    assert main(["certify", str(path)]) == 1


def test_unreadable_file_exit_code(tmp_path):
    assert main(["validate", str(tmp_path / "missing.json")]) == 1


def test_bad_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    assert main(["bound", "--m", "2", "--n-range", "3..5"]) == 64


def test_bound_rows(capsys):
    assert main(["bound", "--m", "8", "--n-range", "8..9"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "m,n,regime,value,ceiling"
    assert lines[1] == "8,8,five_sevenths,320/7,46"


def test_solve(capsys):
    assert main(["solve", "--graph", "cm-cn:3,3", "--max-k", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == 3 and out["witness_valid"]
    assert main(["solve", "--graph", "cm-cn:3,3", "--max-k", "3", "--budget-seconds", "0"]) == 3


def test_fuzz_clean_run(tmp_path, capsys):
    q = tmp_path / "q"
    assert main(["fuzz", "--m", "3", "--n", "9", "--count", "6", "--seed", "1", "--quarantine", str(q)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["falsifications"] == 0
    assert not q.exists()


def test_fuzz_quarantines_falsifications(tmp_path, monkeypatch, capsys):
    import crossring.cli as cli
    from crossring.events import Falsification

    real = cli.certify

    def broken(d):
        cert = real(d)
        cert.falsifications = [Falsification("injected", "forced", drawing=to_json(d))]
        return cert

    monkeypatch.setattr(cli, "certify", broken)
    monkeypatch.setenv("CROSSRING_THREADS", "1")
    q = tmp_path / "q"
    assert main(["fuzz", "--m", "3", "--n", "7", "--count", "2", "--seed", "5", "--quarantine", str(q)]) == 2
    files = sorted(p.name for p in q.iterdir())
    assert files == ["falsification-m3-n7-seed5.json", "falsification-m3-n7-seed6.json"]
    saved = json.loads((q / files[0]).read_text(encoding="utf-8"))
    assert saved["falsifications"][0]["check"] == "injected"
    assert saved["falsifications"][0]["drawing"]["m"] == 3


def test_run_fuzz_parallel_matches_serial():
    a = run_fuzz(3, 9, 8, 3, workers=1)
    b = run_fuzz(3, 9, 8, 3, workers=2)
    assert [(r.seed, r.crossings, r.robust) for r in a] == [(r.seed, r.crossings, r.robust) for r in b]


def test_console_entry_point(tmp_path):
    out = tmp_path / "d.json"
    proc = subprocess.run(
        [sys.executable, "-m", "crossring.cli", "gen-canonical", "--m", "4", "--n", "6", "-o", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    proc = subprocess.run([sys.executable, "-m", "crossring.cli", "validate", str(DATA / "self_crossing_separator.json")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "valid good drawing" in proc.stdout

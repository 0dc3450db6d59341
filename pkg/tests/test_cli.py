import json
import subprocess
import sys
from pathlib import Path

import pytest

from vsgraph.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out = capsys.readouterr()
    return status, out.out, out.err


def test_realize_yes_and_no(capsys):
    status, out, _ = run(capsys, "realize", DATA / "trefoil.vsg")
    assert status == 0
    assert "realizable: yes" in out and "certificate:" in out and "face 0:" in out
    status, out, _ = run(capsys, "realize", DATA / "non_realizable.vsg", "--oracle")
    assert status == 1
    assert "realizable: no" in out and "agree: yes" in out


def test_lk_renders_exact_halves(capsys):
    assert run(capsys, "lk", DATA / "hopf.vsg", "P", "Q")[1] == "lk: 1\n"
    assert run(capsys, "lk", DATA / "virtual_hopf.vsg", "P", "Q")[1] == "lk: 1/2\n"


def test_json_output_keeps_key_order(capsys):
    status, out, _ = run(capsys, "validate", DATA / "trefoil.vsg", "--format", "json")
    assert status == 0
    assert list(json.loads(out)) == ["status", "vertices", "edges", "crossings"]
    _, before, _ = run(capsys, "--format", "json", "yamada", DATA / "trefoil.vsg")
    assert "yamada" in json.loads(before)


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.vsg"
    bad.write_text("vertices v\nedge a: v -> v : Q1+ U1+\n")
    status, _, err = run(capsys, "validate", bad)
    assert status == 2
    assert "2:18: bad passage token" in err
    assert run(capsys, "validate", tmp_path / "missing.vsg")[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["realize"])
    assert exc.value.code == 2
    assert run(capsys, "lk", DATA / "hopf.vsg", "P", "nowhere")[0] == 2
    assert run(capsys, "group", DATA / "trefoil.vsg", "--hom", "Q8")[0] == 2


def test_budget_exit_code(capsys):
    assert run(capsys, "yamada", DATA / "trefoil.vsg", "--budget", "2")[0] == 3
    assert run(capsys, "group", DATA / "trefoil.vsg", "--hom", "S3", "--budget", "2")[0] == 3


def test_invariant_commands(capsys):
    status, out, _ = run(capsys, "group", DATA / "trefoil.vsg", "--hom", "S3")
    assert status == 0 and "hom_count: 12" in out
    status, out, _ = run(capsys, "tprofile", DATA / "handcuff_virtual.vsg")
    assert "[1/2] x1" in out
    status, out, _ = run(capsys, "gauss-shadow", DATA / "trefoil.vsg")
    assert "a: 1 2 3 1 2 3" in out


def test_moves_commands(capsys):
    status, out, _ = run(capsys, "moves", "equiv", DATA / "kinked_unknot.vsg", DATA / "unknot.vsg")
    assert status == 0 and "1. R1 remove 1 on a" in out
    status, out, _ = run(capsys, "moves", "equiv", DATA / "trefoil.vsg", DATA / "unknot.vsg")
    assert status == 1 and "witness:" in out
    status, out, _ = run(capsys, "moves", "neighbors", DATA / "unknot.vsg")
    assert status == 0 and out.startswith("count: ")


def test_experiment_commands(capsys):
    status, out, _ = run(capsys, "ivl", DATA / "k6.vsg")
    assert status == 0 and "holds: yes" in out
    status, out, _ = run(capsys, "vu", DATA / "trefoil.vsg")
    assert status == 0 and "vu: 2" in out
    status, out, _ = run(capsys, "demo", "forbidden", "--samples", "3")
    assert status == 0 and "separated: yes" in out
    assert run(capsys, "vu", DATA / "hopf.vsg")[0] == 2


def test_seed_from_environment_is_reproducible(monkeypatch, capsys):
    monkeypatch.setenv("VSG_SEED", "5")
    first = run(capsys, "cg6", "--samples", "2")
    second = run(capsys, "cg6", "--samples", "2")
    assert first == second and first[0] == 0
    assert "seed: 5" in first[1]
    assert run(capsys, "cg6", "--samples", "2", "--seed", "5") == first


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "vsgraph", "lk", str(DATA / "hopf.vsg"), "P", "Q"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "lk: 1\n"

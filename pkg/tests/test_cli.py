import os
import subprocess
import sys
from pathlib import Path

import pytest

from golden_commands import COMMANDS, ROOT, run

GOLDEN = ROOT / "tests" / "golden"


@pytest.fixture(autouse=True)
def at_root(monkeypatch):
    monkeypatch.chdir(ROOT)


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_golden_regenerates_exactly(name):
    argv, expected = COMMANDS[name]
    code, out, err = run(argv)
    assert code == expected, err
    assert out == (GOLDEN / name).read_text()


def test_identity_check_exit_zero():
    code, out, _ = run(["check-proof", "tests/data/identity.proof", "tests/data/empty.ctx", "tests/data/identity.goal"])
    assert code == 0 and out == "check=ok\n"


def test_check_proof_accepts_surface_goal(tmp_path):
    goal = tmp_path / "goal.txt"
    goal.write_text("a -> a\n")
    code, out, _ = run(["check-proof", "tests/data/identity.proof", "tests/data/empty.ctx", str(goal)])
    assert code == 0


def test_fuzz_is_deterministic_and_seed_sensitive():
    a = run(["fuzz-soundness", "--seed", "7", "--trials", "20"])
    b = run(["fuzz-soundness", "--seed", "7", "--trials", "20"])
    assert a == b and a[0] == 0
    assert "violations=0" in a[1]


def test_eval_open_formula_is_closed(tmp_path):
    f = tmp_path / "open.txt"
    f.write_text("(eq (var 0) (var 0))")
    code, out, _ = run(["eval", "tests/data/structure_demo.txt", str(f)])
    assert code == 0
    assert out.splitlines()[0] == "closed_by=universal" and "forces=true" in out


def test_print_round_trips_parse(tmp_path):
    code, out, _ = run(["parse", "tests/data/exists_eq.txt"])
    sexpr = out.splitlines()[2].split("=", 1)[1]
    p = tmp_path / "f.sexpr"
    p.write_text(sexpr)
    code, out, _ = run(["print", str(p)])
    assert code == 0 and out == "text=forall v0. (forall v1. v0 = v1 -> false) -> false\n"


def test_corpus_variants():
    code, out, _ = run(["corpus", "--list"])
    assert code == 0 and len(out.splitlines()) == 10
    code, out, _ = run(["corpus", "--axiom", "axiom_of_emptyset"])
    assert "text=forall v0. v0 in empty -> false" in out
    code, out, _ = run(["corpus", "--collection", "x = y"])
    assert code == 0 and "closed=true" in out


@pytest.mark.parametrize(
    "argv, code, kind",
    [
        ([], 2, "USAGE"),
        (["nope"], 2, "USAGE"),
        (["delta", "tests/data/family.txt"], 2, "USAGE"),
        (["parse", "does/not/exist.txt"], 2, "INPUT"),
        (["corpus", "--axiom", "axiom_of_choice"], 2, "USAGE"),
        (["cohen", "--ground", "13"], 3, "SIZE_GUARD"),
        (["eval", "tests/data/structure_demo.txt", "tests/data/p_zero.txt", "--gamma", "9"], 2, "USAGE"),
        (["fuzz-soundness", "--trials", "-1"], 2, "USAGE"),
    ],
)
def test_error_exit_codes(argv, code, kind):
    got, out, err = run(argv)
    assert got == code
    line = err.strip().splitlines()[-1]
    assert line.startswith(f"error: {kind} ")


def test_parse_error_reports_position(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("forall x.\n  x in\n")
    code, _, err = run(["parse", str(bad)])
    assert code == 2 and err.startswith("error: PARSE 3:1:")


def test_delta_failure_exit_one():
    code, out, _ = run(["delta", "tests/data/family.txt", "--target", "4"])
    assert code == 1 and "found=false" in out


def test_module_entry_point():
    env = dict(os.environ)
    env["PYTHONPATH"] = str(ROOT / "src") + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "bvlogic", "cohen", "--ground", "1", "--density"],
        capture_output=True, text=True, cwd=Path(ROOT), env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == "ground=1\npoints=0.0\nconditions=3\ndensity=true\n"

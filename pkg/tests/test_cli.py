from __future__ import annotations

import json
import subprocess
import sys

import pytest

from betagamma.cli import main
from betagamma.rep import builtin_rep, to_document


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ope_contraction(capsys):
    code, out, _ = run(capsys, "ope", "sl2-adjoint", "beta(e,0)", "gamma(e,0)")
    assert code == 0 and out.strip() == "n=0: 1"


def test_ope_regular(capsys):
    code, out, _ = run(capsys, "ope", "sl2-adjoint", "beta(e,0)", "beta(f,0)")
    assert code == 0 and out.strip() == "(regular)"


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "ope", "sl2-adjoint", "beta(e,0", "beta(f,0)")
    assert code == 2 and "position 8" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense"])
    assert info.value.code == 2


def test_verify_all(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "all", "--rep", "sl2-adjoint", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data["checks"]) >= 40
    assert all(c["status"] == "pass" for c in data["checks"])
    assert data["config"]["trunc"] == 20 and data["config"]["seed"] == 20240001
    ids = [c["id"] for c in data["checks"]]
    assert ids == sorted(ids)


def test_verify_json_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "generators", "--json", str(a))
    run(capsys, "verify", "generators", "--json", str(b))
    assert a.read_text() == b.read_text()


def test_verify_hilbert_closed_form(capsys):
    code, out, _ = run(capsys, "verify", "hilbert", "--weights", "2,2,0,0,-2,-2", "--closed", "1/(2,2,2)")
    assert code == 0
    code, out, _ = run(capsys, "verify", "hilbert", "--weights", "2,2,0,0,-2,-2", "--closed", "1/(2,2)")
    assert code == 1 and "first mismatch at t^2" in out


def test_verify_commutant_witness(capsys):
    code, out, _ = run(capsys, "verify", "commutant", "--v", "beta(e,0)")
    assert code == 1
    assert "h^ o_0 v = 2 beta[e](-1)" in out


def test_verify_commutant_default_triple(capsys):
    code, out, _ = run(capsys, "verify", "commutant")
    assert code == 0 and "3 passed" in out


def test_hilbert_command(capsys):
    code, out, _ = run(capsys, "hilbert", "--weights", "2,2,0,0,-2,-2", "--trunc", "8")
    assert code == 0 and out.strip() == "1, 0, 3, 0, 6, 0, 10, 0, 15"
    code, out, _ = run(capsys, "hilbert", "--weights", "", "--trunc", "0")
    assert out.strip() == "1"


def test_invariants_command(capsys):
    code, out, _ = run(capsys, "invariants", "--space", "SymV*", "--dmax", "2")
    assert code == 0 and out.split("\n")[:3] == ["d=0: 1", "d=1: 0", "d=2: 1"]


def test_rep_file(capsys, tmp_path):
    path = tmp_path / "adj.json"
    path.write_text(json.dumps(to_document(builtin_rep("sl2-adjoint"))))
    code, out, _ = run(capsys, "verify", "level", "--rep-file", str(path))
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "verify", "level", "--rep-file", str(bad))
    assert code == 2 and "error" in err


def test_standard_rep_without_form_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "level", "--rep", "sl2-standard")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "betagamma", "ope", "sl2-adjoint", "gamma(e,0)", "beta(e,0)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "n=0: -1"


def test_ope_with_primed_label(capsys):
    code, out, _ = run(capsys, "ope", "sl2-adjoint", "beta(e,0)", "gamma(e',0)")
    assert code == 0 and out.strip() == "n=0: 1"


def test_hilbert_sym_case(capsys):
    code, out, _ = run(capsys, "hilbert", "--weights", "2,0,-2", "--trunc", "4")
    assert out.strip() == "1, 0, 1, 0, 1"

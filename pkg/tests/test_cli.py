import json
import subprocess
import sys

import pytest

from loopcell.cli import main, parse_ranks
from loopcell.constructions import NilpotentUpper, lusztig_point
from loopcell.exactalg import LaurentMatrix, matrix_to_json
from loopcell.harness import SELECTORS, VerificationReport, run


@pytest.fixture
def write_matrix(tmp_path):
    def _write(M, name="m.json"):
        p = tmp_path / name
        p.write_text(matrix_to_json(M))
        return str(p)
    return _write


def test_parse_ranks():
    assert parse_ranks("2..5") == [2, 3, 4, 5]
    assert parse_ranks("3") == [3]
    assert parse_ranks("4,2") == [2, 4]


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "1"], ["verify", "--n", "x"], ["verify", "nonsense"],
    ["verify", "--n", "6"], ["verify", "--samples", "0"], ["frobnicate"], [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_verify_small_rank(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "kappa", "stable", "--n", "2..3", "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert "kappa.length" in text and "0 failed" in text
    report = VerificationReport.from_json(out.read_text())
    assert report.passed and report.ns == [2, 3]


def test_large_flag_unlocks_rank_six(capsys):
    assert main(["verify", "kappa", "--n", "6", "--large", "--quiet"]) == 0
    assert "0 failed" in capsys.readouterr().out


def test_verify_all_rank_two(capsys):
    assert main(["verify", "all", "--n", "2", "--samples", "5", "--quiet"]) == 0


def test_factorize_identity(write_matrix, capsys):
    assert main(["factorize", write_matrix(LaurentMatrix.identity(3))]) == 0
    assert "w = [1,2,3], word = e" in capsys.readouterr().out


def test_factorize_grassmannian(write_matrix, capsys):
    psi = lusztig_point(NilpotentUpper.from_dict(2, {(1, 2): 1}))
    assert main(["factorize", write_matrix(psi), "--grassmannian", "--show-lu"]) == 0
    out = capsys.readouterr().out
    assert "grassmannian cell = [0,3]" in out and "L = " in out and "U = " in out


def test_factorize_malformed(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 2,\n "entries": [[1, }')
    assert main(["factorize", str(p)]) == 2
    assert "line 2, column" in capsys.readouterr().err


def test_factorize_missing_file(tmp_path, capsys):
    assert main(["factorize", str(tmp_path / "absent.json")]) == 2


def test_factorize_singular(write_matrix, capsys):
    assert main(["factorize", write_matrix(LaurentMatrix([[1, 1], [1, 1]]))]) == 1
    assert "singular" in capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "loopcell", "verify", "kappa0", "--n", "2", "--quiet"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "0 failed" in res.stdout


# -- the report --------------------------------------------------------------------

def test_report_is_deterministic_and_roundtrips():
    a = run(["crucial", "lusztig"], [2, 3], seed=7, samples=4)
    b = run(["crucial", "lusztig"], [2, 3], seed=7, samples=4)
    assert a.content() == b.content()
    assert VerificationReport.from_json(a.to_json()) == a
    ids = [(c.claim_id, json.dumps(c.params, sort_keys=True)) for c in a.claims]
    assert ids == sorted(ids)


def test_seed_changes_samples():
    a = run(["lusztig"], [3], seed=1, samples=2)
    b = run(["lusztig"], [3], seed=2, samples=2)
    wa = [c.witness for c in a.claims if c.status != "pass"]
    wb = [c.witness for c in b.claims if c.status != "pass"]
    assert wa and wb and wa != wb


def test_refuted_claims_carry_witnesses():
    report = run(["lusztig"], [2], samples=2)
    refuted = [c for c in report.claims if c.status == "refuted"]
    assert [c.claim_id for c in refuted] == ["lusztig.top-cell-upper"]
    assert refuted[0].witness["cell"] == [0, 3]
    assert report.passed


def test_run_rejects_bad_input():
    with pytest.raises(ValueError):
        run(["nope"], [3])
    with pytest.raises(ValueError):
        run(["kappa"], [1])


def test_every_selector_produces_claims():
    for sel in SELECTORS:
        assert run([sel], [3], samples=1).claims, sel

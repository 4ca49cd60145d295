import json
import subprocess
import sys
from pathlib import Path

import pytest

from jacobihom.algebra import dual_numbers, ground_field, matrix_algebra
from jacobihom.algfile import dump_algebra, parse_algebra
from jacobihom.cli import main

DATA = Path(__file__).resolve().parent.parent / "data" / "algebras"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def betti(out):
    """``{degree: (value, reliable)}`` parsed from a records report."""
    res = {}
    for line in out.splitlines():
        rec = json.loads(line)
        if rec["record"] == "degree":
            res[rec["degree"]] = (rec["betti"], rec["reliable"])
    return res


def test_hochschild_k(capsys):
    code, out, _ = run(capsys, "hochschild", DATA / "k.alg", "--cap", 3, "--format", "records")
    assert code == 0
    assert betti(out) == {0: (1, True), 1: (0, True), 2: (0, True), 3: (1, False)}


def test_hochschild_dual_numbers_text(capsys):
    code, out, _ = run(capsys, "hochschild", DATA / "dual.alg", "--cap", 3)
    assert code == 0
    assert "H_0 = 2" in out and "H_1 = 1" in out and "H_2 = 1" in out
    assert "H_3 <= " in out and "unreliable" in out


def test_output_is_byte_identical(capsys, tmp_path):
    args = ["cyclic", DATA / "dual.alg", "--cap", 3]
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, *args, "--out", target)
    assert code == 0 and out == "" and target.read_text() == first


def test_cyclic_cap_zero_is_abelianization(capsys):
    code, out, _ = run(capsys, "cyclic", DATA / "m2k.alg", "--cap", 0, "--format", "records")
    assert code == 0 and betti(out) == {0: (1, True)}
    code, out, _ = run(capsys, "cyclic", DATA / "kxk.alg", "--cap", 0, "--format", "records")
    assert betti(out) == {0: (2, True)}


def test_cyclic_dual_numbers(capsys):
    _, out, _ = run(capsys, "cyclic", DATA / "dual.alg", "--cap", 3, "--format", "records")
    assert betti(out) == {0: (2, True), 1: (0, True), 2: (2, True), 3: (0, True)}


def test_relative_with_idempotents(capsys):
    code, out, _ = run(capsys, "relative", DATA / "m2k.alg", "--idempotent", "e11",
                       "--idempotent", "e22", "--cap", 2, "--format", "records")
    assert code == 0
    assert betti(out)[0] == (1, True) and betti(out)[1] == (0, True)


def test_relative_rejects_bad_idempotents(capsys):
    code, _, err = run(capsys, "relative", DATA / "m2k.alg", "--idempotent", "e12")
    assert code == 2 and "separable" in err
    code, _, err = run(capsys, "relative", DATA / "m2k.alg", "--idempotent", "zz")
    assert code == 2 and "unknown label" in err


def test_lie_gl2_and_commutator(capsys):
    code, out, _ = run(capsys, "lie", "gl:2", "--format", "records")
    assert code == 0
    assert {d: b for d, (b, _) in betti(out).items()} == {0: 1, 1: 1, 2: 0, 3: 1, 4: 1}
    _, out2, _ = run(capsys, "lie", DATA / "m2k.alg", "--format", "records")
    assert betti(out2) == betti(out)


def test_lie_document(capsys, tmp_path):
    doc = {"labels": ["h", "e", "f"],
           "brackets": [{"left": "h", "right": "e", "result": {"e": "2"}},
                        {"left": "h", "right": "f", "result": {"f": "-2"}},
                        {"left": "e", "right": "f", "result": {"h": "1"}}]}
    p = tmp_path / "sl2.lie"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "lie", p, "--format", "records")
    assert code == 0
    assert {d: b for d, (b, _) in betti(out).items()} == {0: 1, 1: 0, 2: 0, 3: 1}


def test_malformed_file_reports_location(capsys, tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text('{"labels": ["1"],\n "unit": {"1": "1"}\n "products": []}')
    code, _, err = run(capsys, "hochschild", p)
    assert code == 2 and "line 3, column 2" in err
    p.write_text(json.dumps({"labels": ["1"], "unit": {"1": "1"},
                             "products": [{"left": "1", "right": "1", "result": {"1": "x"}}]}))
    code, _, err = run(capsys, "hochschild", p)
    assert code == 2 and "products[0].result.1" in err


def test_non_associative_input_rejected(capsys, tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text(json.dumps({"labels": ["1", "x"], "unit": {"1": "1"}, "products": [
        {"left": "1", "right": "1", "result": {"1": "1"}},
        {"left": "1", "right": "x", "result": {"x": "1"}},
        {"left": "x", "right": "1", "result": {"x": "1"}},
        {"left": "x", "right": "x", "result": {"1": "1", "x": "1"}}]}))
    # x^2 = 1 + x is associative and unital, so this file is fine
    assert run(capsys, "hochschild", p, "--cap", 1)[0] == 0
    p.write_text(json.dumps({"labels": ["1"], "unit": {"1": "1"},
                             "products": [{"left": "1", "right": "1", "result": {"1": "2"}}]}))
    code, _, err = run(capsys, "hochschild", p)
    assert code == 2 and "input error" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "hochschild")[0] == 2
    assert run(capsys, "hochschild", DATA / "k.alg", "--cap", -1)[0] == 2
    assert run(capsys, "hochschild", DATA / "missing.alg")[0] == 2
    code, _, err = run(capsys, "lie", "gl:x")
    assert code == 2 and "gl:N" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "HH-UNIT-K", "H0-Z")
    assert code == 0 and "2 checks: 2 pass, 0 fail, 0 skipped" in out
    code, _, err = run(capsys, "verify", "NOPE")
    assert code == 2 and "unknown check 'NOPE'" in err
    code, out, _ = run(capsys, "verify", "H1-Z", "--format", "records", "--seed", 4)
    assert code == 0 and json.loads(out)["verdict"] == "pass"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from jacobihom import verifier

    def broken(rng, notes):
        return False, {"value": 1}, {"seed": 0}
    monkeypatch.setitem(verifier._REGISTRY, "BROKEN",
                        (verifier.CheckDescriptor("BROKEN", "s", "p", "e"), broken))
    code, out, _ = run(capsys, "verify", "BROKEN")
    assert code == 1 and "BROKEN: FAIL" in out


def test_size_guard_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("HOMOLOGY_SIZE_GUARD", "100")
    code, _, err = run(capsys, "hochschild", DATA / "m3k.alg", "--cap", 3)
    assert code == 3 and "size guard" in err
    code, out, _ = run(capsys, "verify", "MORITA-N3")
    assert code == 0 and "SKIPPED(SIZE-GUARD)" in out


def test_list_checks(capsys):
    code, out, _ = run(capsys, "list-checks")
    assert code == 0 and len(out.splitlines()) == 22
    _, out, _ = run(capsys, "list-checks", "--format", "records")
    assert all(json.loads(line)["record"] == "check-descriptor" for line in out.splitlines())


@pytest.mark.parametrize("name", ["k", "dual", "kxk", "m2k", "m3k", "m2dual"])
def test_shipped_files_parse(name):
    a = parse_algebra((DATA / f"{name}.alg").read_text(), source=name)
    assert dump_algebra(a) == (DATA / f"{name}.alg").read_text()


def test_shipped_files_match_constructors():
    assert (DATA / "m2k.alg").read_text() == dump_algebra(matrix_algebra(ground_field(), 2))
    assert (DATA / "dual.alg").read_text() == dump_algebra(dual_numbers())


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "jacobihom.cli", "hochschild",
                          str(DATA / "k.alg"), "--cap", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and "H_0 = 1" in res.stdout

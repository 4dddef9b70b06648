import json
import subprocess
import sys

import pytest

from weightspaces.cli import main


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture
def p3(tmp_path):
    return write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")


@pytest.fixture
def c5(tmp_path):
    return write(tmp_path, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")


@pytest.fixture
def c6(tmp_path):
    return write(tmp_path, "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_wcw_json(capsys, p3):
    code, out, _ = run(capsys, "wcw", p3, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["dimension"] == 2 and doc["mode"] == "wcw" and doc["n"] == 3
    [r] = doc["restrictions"]
    assert r["equation"] == "w1 = w0 + w2"
    assert r["coeffs"] == ["-1", "1", "-1"]
    assert r["provenance"] == {"shape": "K12", "b_x": [1], "b_y": [0, 2]}


def test_wcw_text(capsys, p3):
    code, out, _ = run(capsys, "wcw", p3)
    assert code == 0 and "dimension 2" in out and "w1 = w0 + w2" in out


def test_certificates_revalidate(capsys, c6):
    code, out, _ = run(capsys, "evs", c6, "--json", "--certificates")
    doc = json.loads(out)
    assert code == 0 and doc["restrictions"]
    for r in doc["restrictions"]:
        w = r["provenance"]["witness"]
        m1 = {tuple(e) for e in w["m1"]}
        m2 = {tuple(e) for e in w["m2"]}
        support = {tuple(e) for e, c in zip(doc["edges"], r["coeffs"]) if c != "0"}
        assert m1 ^ m2 == support


def test_jobs_do_not_change_output(capsys, c6):
    _, single, _ = run(capsys, "evs", c6, "--json", "--certificates")
    _, multi, _ = run(capsys, "evs", c6, "--json", "--certificates", "--jobs", "2")
    assert single == multi


def test_recognize_equimatchable(capsys, c5, c6):
    code, out, _ = run(capsys, "recognize-equimatchable", c6, "--json")
    doc = json.loads(out)
    assert code == 1 and doc["certificate"]["path"] == [0, 1, 2, 3]
    assert run(capsys, "recognize-equimatchable", c5)[0] == 0


def test_recognize_wellcovered(capsys, p3, c5):
    code, out, _ = run(capsys, "recognize-wellcovered", p3, "--json")
    doc = json.loads(out)
    assert code == 1 and not doc["well_covered"]
    a, b = doc["certificate"]["maximal_sets"]
    assert len(a) != len(b)
    code, out, _ = run(capsys, "recognize-wellcovered", c5)
    assert code == 0 and out.strip() == "well-covered"


def test_oracle_commands(capsys, p3, c6):
    code, out, _ = run(capsys, "oracle-wcw", p3, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["source"] == "oracle" and doc["dimension"] == 2 and doc["maximal_sets"] == 2
    code, out, _ = run(capsys, "oracle-evs", c6, "--json")
    assert code == 0 and json.loads(out)["dimension"] == json.loads(run(capsys, "evs", c6, "--json")[1])["dimension"]


def test_parse_error(capsys, tmp_path):
    path = write(tmp_path, "bad.txt", "3 1\n0 0\n")
    code, _, err = run(capsys, "evs", path)
    assert code == 2 and "self-loop" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "evs", str(tmp_path / "nope"))[0] == 2


def test_claw(capsys, tmp_path):
    path = write(tmp_path, "claw.txt", "4 3\n0 1\n0 2\n0 3\n")
    code, _, err = run(capsys, "wcw", path)
    assert code == 2 and "claw" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--samples", "5", "--seed", "3")
    assert code == 0 and out.strip().endswith("PASS")
    assert "64/64 graphs: evs matches oracle" in out


def test_module_entry_point(p3):
    proc = subprocess.run([sys.executable, "-m", "weightspaces", "evs", p3, "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dimension"] == 1

import json
import subprocess
import sys

import pytest

from sphericalweights.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(text):
    d = json.loads(text)
    assert d["schema"] == 1
    return d


def test_table_examples(capsys):
    code, out, _ = run(capsys, "table", "--case", "5", "--n", "1", "--m", "1")
    assert code == 0
    assert [g["weight"] for g in as_json(out)["generators"]] == ["π1+φ1"]
    code, out, _ = run(capsys, "table", "--case", "7", "--n", "2", "--m", "2", "--l", "2")
    assert len(as_json(out)["generators"]) == 6
    code, out, _ = run(capsys, "table", "--case", "1", "--n", "2", "--format", "tsv")
    assert code == 0 and len(out.strip().splitlines()) == 4


@pytest.mark.parametrize("argv", [
    ("table", "--case", "4", "--n", "4", "--m", "1"),
    ("verify", "--case", "4", "--n", "4", "--m", "1"),
    ("verify", "--case", "6"),
    ("spectrum", "--case", "3", "--n", "3", "--m", "1"),
    ("canonical", "--case", "1", "--n", "3"),
    ("irreducible", "--case", "2", "--n", "4"),
    ("branch", "--chain", "sl", "--n", "3", "--weight", "1,0"),
    ("branch", "--chain", "sl", "--weight", "1,0"),
    ("verify", "--case", "5", "--n", "1", "--m", "1", "--trials", "0"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_verify_case8_passes_and_is_deterministic(capsys):
    argv = ("verify", "--case", "8", "--n", "1", "--m", "1", "--trials", "20", "--seed", "1")
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    rep = as_json(out1)
    assert rep["pass"] and {s["check"] for s in rep["suites"]} >= {
        "equivariance", "relations", "canonical", "irreducibility", "freeness"}
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_verify_case3_witness(capsys):
    code, out, _ = run(capsys, "verify", "--case", "3", "--n", "3", "--m", "1", "--trials", "20")
    assert code == 0
    irr = [s for s in as_json(out)["suites"] if s["check"] == "irreducibility"][0]
    assert irr["witnesses"][0]["values"] == {"Δ": "0", "Φ2": "-1"}


def test_verify_spectral_case(capsys):
    code, out, _ = run(capsys, "verify", "--case", "2", "--n", "4", "--trials", "3", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[0] == "spectral generators\tpass"


def test_branch_and_spectrum(capsys):
    code, out, _ = run(capsys, "branch", "--chain", "spin", "--n", "6", "--weight", "0,0,1")
    rep = as_json(out)
    assert code == 0 and rep["dimension"] == rep["restricted_dimension"] == 8
    assert {tuple(c["weight"]) for c in rep["constituents"]} == {(0, 1, 0), (0, 0, 1)}
    code, out, _ = run(capsys, "spectrum", "--case", "2", "--n", "3", "--degree-bound", "0", "--format", "tsv")
    assert code == 0 and out == "0\t0,0\t1\n"
    code, out, _ = run(capsys, "spectrum", "--case", "1", "--n", "2", "--degree-bound", "2")
    assert as_json(out)["multiplicity_free"]


def test_irreducible_and_canonical(capsys):
    code, out, _ = run(capsys, "irreducible", "--case", "8", "--n", "2", "--m", "2", "--format", "tsv")
    assert code == 0 and "witness\tΔ\tpass" in out
    code, out, _ = run(capsys, "canonical", "--case", "5", "--n", "1", "--m", "1", "--seed", "3")
    rep = as_json(out)
    assert code == 0 and set(rep["slices"]) == {"Pbar", "Qbar"} and rep["transcript"]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sphericalweights.cli", "table", "--case", "6", "--n", "3",
                           "--format", "tsv"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip()

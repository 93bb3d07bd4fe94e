import csv
import io
import json
import subprocess
import sys

import pytest

from planeinterp.cli import run
from planeinterp.linsys import InvariantRow, Verdict
from planeinterp.oracle import RankCertificate
from planeinterp.sympow import BundleDecomp, sym_power


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_bounds_text():
    code, text = call("bounds", "--n", "10")
    assert code == 0
    assert "c2 = 2280/721" in text
    assert "c1 = 60/19" in text


def test_bounds_json():
    code, text = call("bounds", "--n", "8", "--level", "1", "--format", "json")
    record = json.loads(text)
    assert record == {"n": 8, "k": 2, "alpha": 4, "c1": "8/3", "c2": "48/17", "thm1_applies": True,
                      "main_thm_applies": True, "refinement_applies": False, "level": 1, "cf": "8/3"}


def test_bounds_square_is_usage_error(capsys):
    code, _ = call("bounds", "--n", "9")
    assert code == 2
    assert "perfect square" in capsys.readouterr().err


GOLDEN_CSV = """\
d,n,m,chi_p2,mu,epsilon,b,mhat,chi_s,gamma,kappa
1499,10,474,0,499,2,243,25,0,12,-1
778,10,246,0,259,1,126,13,0,6,-2
428,11,129,0,142,2,135,13,0,6,-1
229,11,69,0,76,1,72,7,0,3,-2
215,12,62,0,71,2,99,9,0,4,-1
118,12,34,0,39,1,54,5,0,2,-2
"""


def test_table_corollary_csv_golden():
    code, text = call("table", "--preset", "corollary12", "--format", "csv")
    assert code == 0
    assert text == GOLDEN_CSV


def test_table_openproblems():
    code, text = call("table", "--preset", "openproblems", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in text.splitlines()]
    assert [r["verdict"]["status"] for r in records] == ["Undecided"] * 4
    code, _ = call("table", "--preset", "openproblems", "--strict")
    assert code == 4


def test_table_sharp():
    code, text = call("table", "--preset", "sharp", "--format", "csv", "--trials", "1")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert [(r["d"], r["verdict"], r["h0_observed"]) for r in rows] == [
        ("3", "CertifiedNonSpecial", "1"), ("12", "CertifiedNonSpecial", "1"), ("48", "CertifiedNonSpecial", "1")]


def test_sweep():
    code, text = call("sweep", "--n-max", "20", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert [int(r["n"]) for r in rows] == [2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20]
    by_n = {int(r["n"]): r for r in rows}
    assert by_n[18]["c2"] == "2448/577"
    assert by_n[10]["c1"] == "60/19"
    code, text = call("sweep", "--n-max", "20")
    assert "2448/577" in text


def test_oracle_command():
    code, text = call("oracle", "--d", "12", "--n", "6", "--m", "5", "--seed", "1", "--trials", "3")
    assert code == 0
    assert "CertifiedNonSpecial" in text and "h0 1" in text
    code, text = call("oracle", "--d", "12", "--n", "6", "--m", "5", "--seed", "1", "--format", "json")
    record = json.loads(text)
    for key in ("d", "n", "m", "prime", "seed", "trials", "expected", "h0_observed", "verdict", "per_trial_h0"):
        assert key in record
    assert RankCertificate.from_dict(record).verdict == "CertifiedNonSpecial"


def test_oracle_budget_exit():
    code, _ = call("oracle", "--d", "1499", "--n", "10", "--m", "474")
    assert code == 3


def test_oracle_inconclusive_strict(monkeypatch):
    from planeinterp import cli, oracle

    monkeypatch.setattr(cli, "OracleConfig",
                        lambda **kw: oracle.OracleConfig(second_prime=None, **kw))
    code, text = call("oracle", "--d", "2", "--n", "2", "--m", "2", "--strict")
    assert "Inconclusive" in text and code == 4
    code, _ = call("oracle", "--d", "2", "--n", "2", "--m", "2")
    assert code == 0


def test_classify_and_invariants_roundtrip():
    code, text = call("classify", "--d", "57", "--n", "10", "--m", "18", "--format", "json")
    assert code == 0
    record = json.loads(text)
    assert Verdict.from_dict(record).status == "Undecided"
    code, text = call("invariants", "--d", "1499", "--n", "10", "--m", "474", "--format", "json")
    row = InvariantRow.from_dict(json.loads(text))
    assert (row.mu, row.kappa, row.gamma) == (499, -1, 12)


def test_sympow_command():
    code, text = call("sympow", "--m", "4")
    assert "A^2*(O^2 + L1 + L2 + L3)" in text
    assert "h0(-2K_S) = h0(Sym^4 E * A^-2) = 2" in text
    code, text = call("sympow", "--m", "3", "--format", "json")
    first = json.loads(text.splitlines()[0])
    assert BundleDecomp.from_json(first["terms"]) == sym_power(3)


@pytest.mark.parametrize(
    "argv",
    [["bounds"], ["bounds", "--n", "x"], ["classify", "--d", "0", "--n", "3", "--m", "1"],
     ["oracle", "--d", "3", "--n", "3", "--m", "2", "--prime", "91"],
     ["oracle", "--d", "3", "--n", "3", "--m", "2", "--seed", "-1"],
     ["bounds", "--n", "10", "--bogus"], ["frobnicate"], ["sympow", "--m", "-1"],
     ["bounds", "--n", "10", "--format", "xml"]],
)
def test_invalid_input_exit_2(argv):
    code, _ = call(*argv)
    assert code == 2


def test_determinism_and_module_entry():
    argv = ["oracle", "--d", "9", "--n", "7", "--m", "3", "--seed", "5", "--format", "json"]
    first = subprocess.run([sys.executable, "-m", "planeinterp", *argv], capture_output=True, text=True)
    second = subprocess.run([sys.executable, "-m", "planeinterp", *argv], capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout

import json
from fractions import Fraction

import pytest

import torsionlab as tl


def jstar(lam):
    return [[0, 0, -1], [0, lam, 0], [1, 0, 0]]


def test_heisenberg_equations():
    eqs = dict(tl.equations("heisenberg3"))
    assert len(eqs) == 9
    assert eqs["13|2"] in ("(xi_2_3)^2", "-(xi_2_3)^2")


def test_verify_jstar():
    assert tl.verify("sl2-Y", jstar(4)) == {"zero_torsion": True, "integrable": False}
    assert tl.verify("sl2-H", jstar(4))["zero_torsion"] is False


def test_classify_heisenberg():
    d = [[Fraction(3), 0, 0], [0, 3, 0], [0, 0, "4/3"]]
    r = tl.classify("heisenberg3", d)
    assert r["family"] == "D"
    assert r["params"] == ["3"]
    assert r["certified"] is True


def test_classify_sl2_recovers_lambda():
    r = tl.classify("sl2-Y", jstar(Fraction(-5, 2)))
    assert r["family"] == "Jstar_sl2"
    assert r["params"] == ["-5/2"]


def test_equivalence():
    s = [[0, -1, 0], [1, 0, 0], [0, 0, 2]]
    t = [[0, -1, 0], [1, 0, 0], [0, 0, 3]]
    assert tl.equivalent("heisenberg3", s, s)["equivalent"] is True
    assert tl.equivalent("heisenberg3", s, t)["equivalent"] is False


def test_orbit_and_cr():
    assert tl.orbit([0, 1, -1])["aut_class"] == "two-sheet"
    assert tl.cr_verdict("heisenberg3", [[0, -1, 0], [1, 0, 0], [0, 0, 5]])["extends"] is True
    v = tl.cr_verdict("heisenberg3", [[2, 0, 0], [0, 2, 0], [0, 0, "3/4"]])
    assert v["extends"] is False
    assert v["obstruction"] == "KernelTooSmall"


def test_errors():
    with pytest.raises(tl.TorsionlabError):
        tl.verify("so3", jstar(1))
    with pytest.raises(tl.TorsionlabError):
        tl.verify("heisenberg3", [[1, 2], [3, 4]])
    with pytest.raises(TypeError):
        tl.verify("heisenberg3", [[1.5, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_reproduce_paper_is_deterministic():
    a = tl.reproduce_paper(9)
    assert a == tl.reproduce_paper(9)
    assert a["summary"]["fail"] == 0


def test_cli_in_process():
    code, out, _ = tl.run_cli("reproduce-paper", "--seed", 4, "--format", "json")
    assert code == 0
    assert json.loads(out)["seed"] == 4
    code, _, err = tl.run_cli("no-such-verb")
    assert code == 2
    assert "Usage" in err

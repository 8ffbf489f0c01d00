import json

import pytest

from tropconvex.cli import eval_expression, main
from tropconvex.semiring import bal, neg, pos
from tropconvex.vectors import parse_vector


def test_eval_expression_examples():
    assert eval_expression("(+0 (+) -0) (*) -(-1)") == bal(-1)
    assert eval_expression("+2 (*) -1") == neg(3)
    assert eval_expression("-1 (*) -1") == pos(2)
    assert eval_expression("+0 (<|) -0") == pos(0)
    assert eval_expression("[+0, -0] (<|) [+1, +0]") == parse_vector("[+1, -0]")
    assert eval_expression("+-2 (*) [+1, o]") == parse_vector("[+-1, o]")


def test_eval_cli(capsys):
    assert main(["eval", "(+0 (+) -0) (*) -(-1)"]) == 0
    assert capsys.readouterr().out.strip() == "b-1"
    assert main(["eval", "+1 (+) +2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"result": "+2"}


def test_eval_parse_error():
    assert main(["eval", "+1 (+)"]) == 2
    assert main(["eval", "wat"]) == 2


def test_member_cli(tmp_path, capsys):
    pts = tmp_path / "fig2.pts"
    pts.write_text("[+0, +0]\n[--2, --2]\n")
    assert main(["member", "--mode", "tc", "--points", str(pts),
                 "--query", "[+-2, --2]"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert main(["member", "--mode", "to", "--points", str(pts),
                 "--query", "[+-2, --2]"]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_separate_cli(tmp_path, capsys):
    pts = tmp_path / "x.pts"
    pts.write_text("[+0, +0]\n[+0, -0]\n[-0, +0]\n")
    code = main(["separate", "--points", str(pts), "--query", "[o, o]",
                 "--mags", "0,1"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("closed")
    # separating a member is inconclusive and exits 1
    assert main(["separate", "--points", str(pts), "--query", "[+0, +0]",
                 "--mags", "0,1"]) == 1


def test_lift_cli(capsys):
    assert main(["lift", "--vector", "[+2, -0]"]) == 0
    assert capsys.readouterr().out.strip() == "[t^2, -1]"
    assert main(["lift", "--vector", "[+2, -0]", "--type", "1"]) == 0
    assert capsys.readouterr().out.strip() == "[3*t^2, -3]"


def test_lift_witness_cli(tmp_path, capsys):
    pts = tmp_path / "seg.pts"
    pts.write_text("[-1, +5]\n[+2, +5]\n")
    assert main(["lift", "--witness", "--points", str(pts), "--type", "1",
                 "--query", "[+0, +5]", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["found"] and payload["sval"] == "[+0, +5]"


def test_lp_cli(tmp_path, capsys):
    pts = tmp_path / "gens.ppts"
    pts.write_text("0, 0\n1, 1\n")
    assert main(["lp", "--points", str(pts),
                 "--query", "t^{-1}, t^{-1}"]) == 0
    assert "feasible" in capsys.readouterr().out
    assert main(["lp", "--points", str(pts), "--query", "t, t"]) == 0
    assert capsys.readouterr().out.strip() == "infeasible"


def test_matroid_cli(tmp_path, capsys):
    mat = tmp_path / "m.csv"
    mat.write_text("1,1\n")
    assert main(["matroid", "--matrix", str(mat), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["axioms_ok"] and payload["representation_ok"]
    assert payload["vectors"] == 3


def test_interval_cli(capsys):
    assert main(["interval", "--x", "[+0,+0]", "--y", "[--2,--2]",
                 "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert any(
        sorted(p["vertices"]) == ["[+-2, +-2]", "[--2, --2]"]
        for p in payload["pieces"]
    )


def test_verify_cli(capsys):
    assert main(["verify", "--suite", "paper-examples", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "paper-examples" in out and "pass" in out


def test_verify_unknown_suite():
    assert main(["verify", "--suite", "nope"]) == 2


def test_verify_json(capsys):
    assert main(["verify", "--suite", "leftsum", "--seed", "3",
                 "--cases", "50", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["suite"] == "leftsum"
    assert payload[0]["failure_count"] == 0

import json

import pytest

from vanishlab import groupspec
from vanishlab.cli import main

A7 = "vanishlab-group 1 permutation\nname A7\ndegree 7\ngen 2 3 4 5 6 7 1\ngen 1 2 3 4 6 7 5\n"


def test_sumzero_cases(capsys):
    assert main(["sumzero", "z3", "z3^2", "1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "case (a) k=3, δ=1"
    assert main(["sumzero", "z4", "-z4", "1", "-1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("case (a) k=4, pairs")
    assert main(["sumzero", "z5", "z5^2", "z5^3", "z5^4", "z6", "z6^5"]) == 0
    assert capsys.readouterr().out.startswith("case (b3), δ=1")


def test_sumzero_errors(capsys):
    assert main(["sumzero", "1", "1"]) == 2
    assert "NotZeroSum" in capsys.readouterr().err
    assert main(["sumzero", "z3", "w"]) == 2
    assert capsys.readouterr().err.startswith("parse error")


def test_analyze(tmp_path, capsys):
    p = tmp_path / "s3.grp"
    groupspec.write(groupspec.spec_for_builtin(["symmetric", 3]), p)
    assert main(["analyze", str(p)]) == 0
    out = capsys.readouterr().out
    assert "pv        1/2" in out and "theorem-a pass m = 2" in out
    assert main(["analyze", str(p), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pv"] == "1/2" and data["theorem_a"]["status"] == "pass"


def test_analyze_a7(tmp_path, capsys):
    p = tmp_path / "a7.grp"
    p.write_text(A7)
    assert main(["analyze", str(p), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pv"] == "1067/1260" and data["theorem_a"]["status"] == "not-applicable"


def test_chartab(tmp_path, capsys):
    p = tmp_path / "q8.grp"
    groupspec.write(groupspec.spec_for_builtin(["quaternion", 8]), p)
    assert main(["chartab", str(p)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("Q8\t8\t")
    assert len(lines) == 6


def test_construct_round_trip(tmp_path, capsys):
    out = tmp_path / "xy.grp"
    assert main(["construct", "xy", "8", "2", "C6", "--expand", "--name", "XYe", "-o", str(out)]) == 0
    spec = groupspec.read(out)
    assert spec.kind == "abelian_semidirect" and spec.name == "XYe"
    assert main(["construct", "frobenius", "5", "1", "4"]) == 0
    assert capsys.readouterr().out == "vanishlab-group 1 builtin\nname F(5^1:4)\nbuiltin frobenius 5 1 4\n"
    assert main(["construct", "frobenius", "5"]) == 2


def test_verify(tmp_path, capsys):
    corpus = tmp_path / "c"
    corpus.mkdir()
    groupspec.write(groupspec.spec_for_builtin(["symmetric", 3]), corpus / "s3.grp")
    report = tmp_path / "r.csv"
    code = main(["verify", "--corpus", str(corpus), "--mode", "theorem-a", "--format", "csv", "--workers", "1", "-o", str(report)])
    assert code == 0
    assert report.read_text().splitlines()[1] == "S3,6,1,2,true,true,true,2,ok"
    assert main(["verify", "--corpus", str(tmp_path / "missing"), "--mode", "analyze"]) == 2


def test_unknown_mode_is_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "--corpus", "bundled", "--mode", "everything"])

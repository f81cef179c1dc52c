import json

import pytest

from foursq.cli import run


def test_decompose_known(capsys):
    assert run(["decompose", "--family", "t11:a=1,m=4", "--n", "71"]) == 0
    assert capsys.readouterr().out == "71 = 1^4 + 3^2 + 5^2 + 6^2\n"


def test_decompose_json(capsys):
    assert run(["decompose", "--family", "t11:a=1,m=4", "--n", "71",
                "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["values"] == [1, 3, 5, 6]


def test_exceptions_member(capsys):
    assert run(["exceptions", "--form", "1,2,6", "--n", "5"]) == 0
    assert capsys.readouterr().out.strip() == "member"
    assert run(["exceptions", "--form", "1,2,6", "--n", "6"]) == 0
    assert capsys.readouterr().out.strip() == "non-member"


def test_scan_finds_47(capsys):
    code = run(["scan", "--spec", "x + 7y ~ square [N]",
                "--from", "0", "--to", "100", "--quiet", "--json"])
    assert code == 1
    report = json.loads(capsys.readouterr().out)
    assert report["counterexamples"] == [47]


def test_scan_clean_range_exits_zero(capsys):
    code = run(["scan", "--spec", "x + 3y + 5z ~ square [N]",
                "--from", "0", "--to", "200", "--quiet"])
    assert code == 0


def test_scan_by_family_name(capsys):
    code = run(["scan", "--family", "square-135", "--to", "150", "--quiet",
                "--json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["counterexamples"] == []


def test_verify(capsys):
    assert run(["verify", "--spec", "x + 3y + 5z ~ square [N]",
                "--n", "43"]) == 0
    out = capsys.readouterr().out
    assert "(x,y,z,w)=(1,5,4,1)" in out
    assert run(["verify", "--spec", "x + 7y ~ square [N]",
                "--n", "47"]) == 1


def test_count(capsys):
    assert run(["count", "--spec", "x + 3y + 5z ~ square [N]",
                "--n", "43"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_hypothesis(capsys):
    assert run(["hypothesis", "--name", "containment_1_4",
                "--bound", "5000"]) == 0
    assert run(["hypothesis", "--name", "ramanujan_1_1_10",
                "--bound", "5000"]) == 0


def test_usage_errors():
    assert run(["scan", "--from", "0", "--to", "10"]) == 2
    assert run(["scan", "--spec", "garbage ~~", "--to", "10",
                "--quiet"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["exceptions", "--form", "1,2", "--n", "5"]) == 2


def test_checkpoint_env_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("FOURSQ_CHECKPOINT_DIR", str(tmp_path))
    run(["scan", "--spec", "x + 7y ~ square [N]", "--from", "0",
         "--to", "100", "--chunk", "50", "--checkpoint", "t.ck",
         "--quiet"])
    assert (tmp_path / "t.ck").exists()


def test_deterministic_stdout(capsys):
    args = ["scan", "--spec", "x + 7y ~ square [N]", "--from", "0",
            "--to", "300", "--quiet", "--json"]
    run(args)
    first = capsys.readouterr().out
    run(args)
    second = capsys.readouterr().out
    # wall time varies; everything else must not
    a, b = json.loads(first), json.loads(second)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b

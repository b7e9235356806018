import json

import pytest

from cliffchar.cli import main


def run(capsys, *args):
    code = main(list(args) + ["-q"])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_order(capsys):
    assert run(capsys, "order", "--n", "1")[1].strip() == "24"
    assert run(capsys, "order", "--n", "4")[1].strip() == "12128668876800"
    code, out, _ = run(capsys, "order", "--format", "json")
    data = json.loads(out)
    assert data["version"] == 1 and data["orders"]["5"] == 25410822678459187200


def test_chartable(capsys):
    code, out, _ = run(capsys, "chartable", "--n", "1")
    assert code == 0 and "MATCH with reference table s4_chartab" in out
    code, out, err = run(capsys, "chartable", "--n", "3")
    assert code == 2 and "verify-c3" in err and not out


def test_chartable_csv_is_deterministic(capsys):
    a = run(capsys, "chartable", "--n", "2", "--format", "csv")[1]
    b = run(capsys, "chartable", "--n", "2", "--format", "csv")[1]
    assert a == b and a.startswith("size,1,640,60")


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "1", "--m", "6")
    assert code == 0 and "187*chi1 + 496*chi2 + 341*chi3 + 528*chi4 + 155*chi5" in out
    code, out, _ = run(capsys, "decompose", "--n", "3", "--m", "3")
    assert code == 0 and "alternative reading 18" in out
    code, _, err = run(capsys, "decompose", "--n", "3", "--m", "9")
    assert code == 2


def test_verify_and_abelianize(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--abelianization-only")
    assert code == 0
    code, out, _ = run(capsys, "abelianize", "--n", "2", "--format", "json")
    assert json.loads(out)["invariant_factors"] == [2]
    code, out, _ = run(capsys, "verify", "--n", "2")
    assert code == 0 and "checks passed" in out


def test_normal_subgroups(capsys):
    code, out, _ = run(capsys, "normal-subgroups", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[2] == "64,1 2,1"


def test_misc_commands(capsys):
    assert run(capsys, "export-presentation", "--n", "2", "--gap")[1].startswith("gap>f:=FreeGroup")
    assert run(capsys, "verify-c3")[0] == 0
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--format", "csv")
    assert out == "n,elements,formula\n1,24,24\n"
    assert run(capsys, "classes", "--n", "1", "--format", "csv")[1].startswith("index,size")


def test_progress_goes_to_stderr(capsys):
    main(["chartable", "--n", "1", "--format", "csv"])
    out = capsys.readouterr()
    assert "enumerated" in out.err and "enumerated" not in out.out


def test_bad_arguments(capsys):
    assert run(capsys, "enumerate", "--n", "3")[0] == 2
    assert run(capsys, "decompose", "--n", "1", "--m", "0")[0] == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])

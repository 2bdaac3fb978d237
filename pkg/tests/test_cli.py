"""Command-line interface, exercised in-process through its main()."""

import json

from nilprim import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--q", "7")
    assert code == 0
    assert json.loads(out)["counts"] == {"abelian": 4, "nonabelian": 8}


def test_enumerate_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--q", "3", "--table")
    assert code == 0
    assert "nonabelian=2" in out
    assert "semidihedral" in out


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["classes"]) == 3


def test_construct_verify_oracle_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--n", "2", "--q", "3",
                       "--kind", "q8")
    assert code == 0
    path = tmp_path / "q8.json"
    path.write_text(out)

    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(out)["passed"] is True

    code, out, _ = run(capsys, "oracle", "irreducible", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] is True

    code, out, _ = run(capsys, "oracle", "conjugate", str(path),
                       "--other", str(path))
    assert code == 0


def test_verify_failure_exit_code(capsys, tmp_path):
    doc = {"schema": 1, "n": 2, "q": 3, "field": "3^1/0,1",
           "generators": ["0,1;2,0", "1,0;0,2"]}  # imprimitive D8
    path = tmp_path / "d8.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "count", "--n", "2", "--q", "4")
    assert code == 2 and "odd" in err

    code, _, err = run(capsys, "construct", "--n", "2", "--q", "3",
                       "--kind", "dh", "--s", "3")
    assert code == 2

    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 2


def test_bad_arguments(capsys):
    assert cli.main(["enumerate", "--n", "2"]) == 2  # missing --q
    assert cli.main([]) == 2

"""The command-line interface: exit codes, formats, determinism."""

import json

from qtcomb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enum_count(capsys):
    code, out, _ = run(capsys, "enum", "--family", "d", "--n", "3", "--count")
    assert code == 0 and out.strip() == "5"


def test_enum_stream_rp(capsys):
    code, out, _ = run(capsys, "enum", "--family", "rp", "--m", "0", "--n", "0")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"letters": [{"v": 0, "barred": False}], "decorated_rises": []}]


def test_enum_qt_csv(capsys):
    code, out, _ = run(
        capsys, "enum", "--family", "pf2", "--m", "1", "--n", "1", "--k", "0", "--qt"
    )
    assert code == 0
    assert out.splitlines() == ["q_exp,t_exp,coeff", "0,0,1", "0,1,1", "1,0,1"]


def test_enum_bad_spec_exits_2(capsys):
    code, _, err = run(capsys, "enum", "--family", "ld", "--n", "2")
    assert code == 2 and "content" in err


def test_enum_members_validate(capsys):
    code, out, _ = run(
        capsys, "enum", "--family", "pf2", "--m", "1", "--n", "1", "--k", "0"
    )
    assert code == 0 and len(out.splitlines()) == 3


def test_biject_psi(tmp_path, capsys):
    word = {
        "letters": [
            {"v": 0, "barred": False},
            {"v": 0, "barred": True},
            {"v": 1, "barred": False},
        ],
        "decorated_rises": [],
    }
    infile = tmp_path / "word.json"
    infile.write_text(json.dumps(word))
    code, out, _ = run(capsys, "biject", "--map", "psi", "--in", str(infile))
    assert code == 0
    report = json.loads(out)
    assert report["output"]["labels"] == [2, 1, 2]
    assert report["stats_before"]["dinv"] == report["stats_after"]["dinv"]


def test_biject_out_of_domain_exits_2(tmp_path, capsys):
    path = {"area_word": [0, 1], "labels": [1, 2], "decorated_rises": [], "ghost_row": False}
    infile = tmp_path / "path.json"
    infile.write_text(json.dumps(path))
    code, _, err = run(capsys, "biject", "--map", "eta-inv", "--in", str(infile))
    assert code == 2 and "eta_inverse" in err


def test_biject_chain_reaches_two_car(tmp_path, capsys):
    # eta-inv then psi on the single-row path
    path = {"area_word": [0], "labels": [0], "decorated_rises": [], "ghost_row": False}
    infile = tmp_path / "p.json"
    infile.write_text(json.dumps(path))
    code, out, _ = run(capsys, "biject", "--map", "eta-inv", "--in", str(infile))
    assert code == 0
    word = json.loads(out)["output"]
    infile.write_text(json.dumps(word))
    code, out, _ = run(capsys, "biject", "--map", "psi", "--in", str(infile))
    assert code == 0
    assert json.loads(out)["output"]["labels"] == [2]


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "examples")
    assert code == 0
    assert out.count('"pass"') == 4


def test_verify_ndinv_small(capsys):
    code, out, _ = run(capsys, "verify", "ndinv", "--max", "3")
    assert code == 0 and '"fail"' not in out


def test_verify_identities_named(capsys):
    code, out, _ = run(
        capsys, "verify", "identities", "--name", "mac-hook", "--max", "3"
    )
    assert code == 0 and '"fail"' not in out


def test_verify_reconcile(capsys):
    code, out, _ = run(capsys, "verify", "recursion-reconcile", "--max", "3")
    assert code == 0 and "survivors=1" in out


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "examples", "--format", "json")
    _, out2, _ = run(capsys, "verify", "examples", "--format", "json")
    assert out1 == out2


def test_verify_writes_file(tmp_path, capsys):
    out = tmp_path / "report.csv"
    code, _, _ = run(capsys, "verify", "examples", "--out", str(out))
    assert code == 0
    assert out.read_text().startswith("suite,instance,status")


def test_bad_usage_exits_2(capsys):
    assert run(capsys, "enum")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2


def test_seedless_rejects_value(capsys):
    code, _, _ = run(capsys, "--seedless=yes", "verify", "examples")
    assert code == 2
    code, _, _ = run(capsys, "--seedless", "verify", "examples")
    assert code == 0


def test_missing_input_file(capsys):
    code, _, err = run(capsys, "biject", "--map", "psi", "--in", "/nonexistent.json")
    assert code == 2

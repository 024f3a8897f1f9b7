import json

import pytest

from beerkoszul.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def test_present_and_kernel(capsys):
    code, out, _ = call(capsys, "present", "--group", "D", "--rank", "3")
    assert code == EXIT_OK and out["relation_dim"] == 4
    code, out, _ = call(capsys, "kernel", "--group", "B", "--rank", "2")
    assert code == EXIT_OK and out["relation_dim"] == 6


def test_dual_both_pairings(capsys):
    for pairing in ("straight", "reversed"):
        code, out, _ = call(capsys, "dual", "--group", "A", "--rank", "3", "--pairing", pairing)
        assert code == EXIT_OK and out["relation_dim"] == 8
        assert out["dual"]["convention"] == pairing


def test_hilbert_from_printed_dual(capsys):
    code, out, _ = call(capsys, "hilbert", "--group", "D", "--rank", "4", "--degree", "5", "--from-dual")
    assert code == EXIT_OK
    assert out["series"] == [1, 12, 123, 1228, 12201, 121116]
    code, out, _ = call(capsys, "hilbert", "--group", "B", "--rank", "1", "--degree", "3", "--from-dual", "1,1")
    assert out["series"] == [1, 1, 1, 1]


def test_hilbert_computed(capsys):
    code, out, _ = call(capsys, "hilbert", "--group", "A", "--rank", "3", "--degree", "4")
    assert out["dims"] == [1, 3, 8, 21, 55]
    code, out, _ = call(capsys, "hilbert", "--group", "A", "--rank", "3", "--dual")
    assert out["dims"] == [1, 3, 1, 0, 0]


def test_pbw(capsys):
    code, out, _ = call(capsys, "pbw", "--group", "D", "--rank", "3", "--order", "custom:u(1,2),uu(1,2),u(1,3),u(2,3),uu(1,3),uu(2,3)")
    assert code == EXIT_OK and out["confluent"]
    assert out["normal_word_counts"] == out["dual_dims"]


def test_reduce(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, err = call(capsys, "reduce", "--group", "D", "--rank", "4", "u(1,2) u(2,3)", "--out", str(target))
    assert code == EXIT_OK and out["agreement"] and not out["zero"]
    assert json.loads(target.read_text()) == out
    assert "reduce" in err
    code, out, _ = call(capsys, "reduce", "--group", "D", "--rank", "4", "u(1,2) uu(1,2)")
    assert out["zero"] and out["normal_form"] == []


def test_morphism(capsys):
    code, out, _ = call(capsys, "morphism", "AtoD:3")
    assert code == EXIT_OK and out["relations_preserved"] and out["perfect_subquotient_degree2"]


def test_verify_small(capsys):
    code, out, err = call(capsys, "verify", "--group", "B", "--rank", "1", "--degree", "6")
    assert code == EXIT_OK and out["summary"]["mismatch"] == 0
    assert "B1" in err or "B:1" in err


def test_verify_d4_degree_one_reports_mismatch(capsys):
    code, out, _ = call(capsys, "verify", "--group", "D", "--rank", "4", "--degree", "2")
    assert code == EXIT_MISMATCH


@pytest.mark.parametrize(
    "argv",
    [
        ["present", "--group", "D", "--rank", "0"],
        ["present", "--rank", "3"],
        ["reduce", "--group", "D", "--rank", "3", "r(1)"],
        ["reduce", "--group", "D", "--rank", "3", "v(1,2)"],
        ["morphism", "AtoQ:3"],
        ["hilbert", "--group", "A", "--rank", "3", "--from-dual", "1,x"],
        ["hilbert", "--group", "A", "--rank", "3", "--from-dual"],
        ["verify", "--group", "D", "--rank", "3", "--field", "prime:10"],
        ["pbw", "--group", "D", "--rank", "3", "--order", "nosuch"],
        ["hilbert", "--group", "A", "--rank", "3", "--degree", "-1"],
    ],
)
def test_bad_input_exits_3(capsys, argv):
    assert run(argv) == EXIT_INPUT
    assert capsys.readouterr().out == ""


def test_argparse_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["present", "--group", "Q", "--rank", "3"])
    assert exc.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == EXIT_INPUT

"""
Step 7 Validation: the command-line surface.
JSON on stdout, exit code 0 on success, 1 on a failed check, 2 on bad input.
"""

import json
import sys

import pytest

import main as cli


def run(capsys, *argv):
    code = cli.main(list(argv) + ["--config", "config.yaml"])
    return code, capsys.readouterr().out


def test_branch_to_even(capsys):
    code, out = run(capsys, "branch", "--to", "even", "--F", "2,1", "--p", "1", "--q", "1")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 2
    assert {(row["D"], row["E"], row["mult"]) for row in rows} == {("1", "2", 1), ("2", "1", 1)}


def test_dim(capsys):
    code, out = run(capsys, "dim", "--F", "1", "--p", "3", "--q", "2")
    assert code == 0
    assert json.loads(out)["dim"] == 5


def test_dim_text_format(capsys):
    code, out = run(capsys, "dim", "--F", "2,1", "--p", "1", "--q", "1", "--format", "text")
    assert code == 0
    assert out.strip() == "dim = 2"


def test_kostka_and_lr(capsys):
    code, out = run(capsys, "kostka", "--F", "2,1", "--alpha", "1,1,1")
    assert code == 0 and json.loads(out)["kostka"] == 2
    code, out = run(capsys, "lr", "--F", "3,2,1", "--D", "2,1", "--E", "2,1")
    assert code == 0 and json.loads(out)["lr"] == 2


def test_weights(capsys):
    code, out = run(capsys, "weights", "--F", "1", "--p", "2", "--q", "1")
    assert code == 0
    assert sum(row["mult"] for row in json.loads(out)) == 3


def test_branch_sub_and_m(capsys):
    code, out = run(capsys, "branch", "--to", "sub", "--F", "2,1", "--p", "2", "--q", "1", "--r", "1", "--s", "0")
    assert code == 0
    sub = json.loads(out)
    code, out = run(capsys, "branch", "--to", "m", "--F", "2,1", "--p", "2", "--q", "1", "--r", "1", "--s", "0")
    assert code == 0
    torus = json.loads(out)
    assert sum(row["mult"] for row in sub) == sum(row["mult"] for row in torus)


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["dim", "--F", "1"],
    ["dim", "--F", "2,2", "--p", "1", "--q", "1"],
    ["dim", "--F", "1,2", "--p", "1", "--q", "1"],
    ["branch", "--F", "2,1", "--p", "1", "--q", "1", "--r", "2", "--s", "0"],
    ["verify", "--F", "2,1", "--alpha", "1,1", "--beta", "1", "--p", "2", "--q", "1", "--r", "1", "--s", "0"],
    ["verify", "--F", "5,4,3,3,3,3,2", "--alpha", "2,3", "--beta", "3,4", "--n", "7",
     "--p", "4", "--q", "4", "--r", "2", "--s", "2"],
    ["verify", "--F", "2,1", "--D", "", "--alpha", "1", "--beta", "1", "--p", "2", "--q", "1", "--r", "1", "--s", "0"],
    ["hwv", "--F", "2,1", "--D", "3", "--alpha", "0", "--beta", "", "--p", "2", "--q", "1", "--r", "1", "--s", "1"],
])
def test_bad_input_exits_with_2(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_verify_passes(capsys):
    code, out = run(
        capsys, "verify", "--F", "2,1", "--D", "1", "--alpha", "1", "--beta", "1",
        "--p", "2", "--q", "1", "--r", "1", "--s", "0",
    )
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["basis_size"] == report["predicted"] == report["oracle"] == 2
    assert all(pair["passed"] for pair in report["pairs"])


def test_hwv_reports_leading_monomials(capsys):
    code, out = run(
        capsys, "hwv", "--F", "2,1", "--D", "1", "--alpha", "1", "--beta", "1",
        "--p", "2", "--q", "1", "--r", "1", "--s", "0",
    )
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 2
    assert all(entry["lm"] == entry["monomial"] for entry in entries)
    assert all("delta" in entry for entry in entries)


def test_oracle_sweep(capsys):
    code, out = run(capsys, "oracle", "--max-size", "2", "--p", "1", "--q", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["checked"] > 0
    assert payload["mismatches"] == []


def test_output_is_deterministic(capsys):
    argv = ("branch", "--to", "pair", "--F", "3,2,1", "--p", "2", "--q", "1", "--r", "1", "--s", "1")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0


def main():
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()

import json

import pytest

from apcover import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_member_in(capsys):
    code, out, _ = run(capsys, "member", "26")
    assert code == 0
    assert out == "26 in A: level=2 lead=1 low=[2,2]\n"


def test_member_out(capsys):
    code, out, _ = run(capsys, "member", "20")
    assert code == 0
    assert out == "20 not in A\n"


def test_count_and_nth(capsys):
    assert run(capsys, "count", "26") == (0, "16\n", "")
    assert run(capsys, "nth", "16") == (0, "26\n", "")
    code, _, err = run(capsys, "nth", "0")
    assert code == 2 and err


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "100")
    assert code == 0
    assert out == "a=6 b=53 n=100 ok\n"
    code, _, err = run(capsys, "witness", "31")
    assert code == 2 and err


def test_witness_huge_value(capsys):
    code, out, _ = run(capsys, "witness", str(10**40 + 7))
    assert code == 0
    assert out.endswith("ok\n")
    assert "e+" not in out  # plain decimal only


def test_verify_covering(capsys):
    code, out, _ = run(capsys, "verify-covering", "--from", "32", "--to", "20000")
    assert code == 0
    assert out == "checked=19969 failures=0\n"


def test_verify_covering_jobs_match_single(capsys):
    _, single, _ = run(capsys, "verify-covering", "--from", "32", "--to", "5000")
    code, multi, _ = run(
        capsys, "verify-covering", "--from", "32", "--to", "5000", "--jobs", "3"
    )
    assert code == 0
    assert multi == single


def test_verify_covering_bad_range(capsys):
    code, _, err = run(capsys, "verify-covering", "--from", "10", "--to", "50")
    assert code == 2 and err


def test_verify_covering_counterexample_path(capsys, monkeypatch):
    monkeypatch.setattr(cli._kernels, "witness_sweep", lambda lo, hi: [42])
    code, out, _ = run(capsys, "verify-covering", "--from", "32", "--to", "100")
    assert code == 1
    assert "FAIL 42" in out
    assert "failures=1" in out


def test_min_n0(capsys):
    code, out, _ = run(capsys, "min-n0", "--upto", "5000")
    assert code == 0
    assert out == "n0=2 scanned_to=5000\n"


def test_stanley(capsys):
    code, out, _ = run(
        capsys, "stanley", "--order", "3", "--seed", "0,1", "--count", "8"
    )
    assert code == 0
    assert out == "0 1 3 4 9 10 12 13\n"


def test_stanley_bad_seed(capsys):
    code, _, err = run(
        capsys, "stanley", "--order", "3", "--seed", "0,1,2", "--count", "5"
    )
    assert code == 2
    assert "3-term AP" in err


def test_density_csv_stdout(capsys):
    code, out, err = run(capsys, "density", "--max-level", "0", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "n,count,ratio"
    assert out.splitlines()[1] == "1,1,1"
    assert "argmax: n=4 count=4 ratio=2" in err


def test_density_jsonl_file(capsys, tmp_path):
    path = tmp_path / "density.jsonl"
    code, out, _ = run(
        capsys, "density", "--max-level", "2", "--jsonl", "--out", str(path)
    )
    assert code == 0
    assert out == ""
    lines = path.read_text().splitlines()
    assert len(lines) == 12
    rec = json.loads(lines[-1])
    assert rec["ratio_num"] == rec["count"] ** 2
    assert rec["ratio_den"] == rec["n"]


def test_density_byte_identical_runs(capsys):
    _, first, _ = run(capsys, "density", "--max-level", "3", "--csv")
    _, second, _ = run(capsys, "density", "--max-level", "3", "--csv")
    assert first == second


def test_argmax(capsys):
    code, out, _ = run(capsys, "argmax", "--upto", "30")
    assert code == 0
    assert out == "n=26 count=16 ratio=3.13785816221\n"


def test_explore_problem1(capsys):
    code, out, _ = run(
        capsys,
        "explore-problem1",
        "--order",
        "3",
        "--seed",
        "0,1",
        "--upto",
        "200",
    )
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("stanley_order=4 ")
    assert "scanned_to=200" in first


def test_explore_problem1_bad_seed(capsys):
    # seed contains a 4-term AP, so the order-4 generation must refuse
    code, _, err = run(
        capsys,
        "explore-problem1",
        "--order",
        "3",
        "--seed",
        "0,1,2,3",
        "--upto",
        "50",
    )
    assert code == 2 and err


def test_explore_problem1_order_too_small(capsys):
    code, _, err = run(
        capsys, "explore-problem1", "--order", "2", "--seed", "0,1", "--upto", "50"
    )
    assert code == 2 and err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "member")[0] == 2
    assert run(capsys, "member", "xyz")[0] == 2


def test_count_negative_rejected(capsys):
    code, _, err = run(capsys, "count", "-1")
    assert code == 2 and err

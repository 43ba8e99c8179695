import json

import pytest

from multiski.cli import dispatch


@pytest.fixture
def coalition_schedule_file(tmp_path):
    path = tmp_path / "eq_75_70.json"
    path.write_text('{"B": 100, "H": 200, "prices": [[75, 70]]}')
    return str(path)


@pytest.fixture
def profile_file(tmp_path):
    path = tmp_path / "profile.json"
    path.write_text(
        '{"n": 3, "B": 100, "H": 200, "pledges": {"1": [[75, 50]], "2": [[75, 50]]}}'
    )
    return str(path)


def test_solve(coalition_schedule_file, capsys):
    assert dispatch(["solve", "--schedule", coalition_schedule_file]) == 0
    out = capsys.readouterr().out
    assert "48/25" in out and "[75]" in out


def test_solve_with_oracle(coalition_schedule_file, capsys):
    assert dispatch(["solve", "--schedule", coalition_schedule_file, "--oracle"]) == 0
    assert "oracle agrees: True" in capsys.readouterr().out


def test_check_eq_spec_accepts(capsys):
    assert dispatch(["check-eq", "--spec", "75:50,50", "--B", "100"]) == 0
    assert "124/75" in capsys.readouterr().out


def test_check_eq_spec_rejects(capsys):
    assert dispatch(["check-eq", "--spec", "10:50,50", "--B", "100"]) == 1


def test_check_eq_profile_with_oracle(profile_file, capsys):
    assert dispatch(["check-eq", "--profile", profile_file, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "oracle certified: True" in out


def test_beta_table(capsys):
    code = dispatch(
        ["beta-table", "--B", "100", "--r", "75", "--w", "19", "--lambda", "1"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "31/25" in out and "1.240000" in out


def test_beta_table_json(capsys):
    code = dispatch(
        ["--json", "beta-table", "--B", "100", "--r", "75", "--w", "70", "--lambda", "0.2"]
    )
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["beta"] == "57/50"


def test_alg1_trace(coalition_schedule_file, capsys):
    code = dispatch(
        [
            "alg1",
            "--schedule",
            coalition_schedule_file,
            "--lambda",
            "0.2",
            "--T",
            "200",
            "--That",
            "200",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "r2=15" in out and "r3=781" in out
    assert "cost = 114" in out


def test_simulate(profile_file, capsys):
    assert dispatch(["simulate", "--profile", profile_file, "--T", "75,75,75"]) == 0
    out = capsys.readouterr().out
    assert "purchase day: 75" in out
    assert "cost=124" in out and "cost=74" in out


def test_enumerate_eq(capsys):
    assert dispatch(["enumerate-eq", "--B", "3", "--n", "2", "--r", "1"]) == 0
    out = capsys.readouterr().out
    assert "weights=1,2" in out and "weights=2,1" in out


def test_experiment_writes_csv(tmp_path, capsys):
    out = tmp_path / "runs" / "cell.csv"
    code = dispatch(
        [
            "experiment",
            "--r",
            "75",
            "--w",
            "19",
            "--lambdas",
            "0.2,1",
            "--sigmas",
            "0,250",
            "--samples",
            "20",
            "--seed",
            "1",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("r,w,lambda")
    assert len(lines) == 5


def test_oracle_diff(capsys):
    assert dispatch(["oracle-diff", "--B", "4", "--samples", "60", "--seed", "3"]) == 0
    assert "0 mismatches" in capsys.readouterr().out


def test_unknown_flag_is_usage_error(capsys):
    assert dispatch(["solve", "--no-such-flag"]) == 3


def test_missing_file_is_usage_error(tmp_path):
    assert dispatch(["solve", "--schedule", str(tmp_path / "nope.json")]) == 3


def test_bad_spec_syntax(capsys):
    assert dispatch(["check-eq", "--spec", "75;50", "--B", "100"]) == 3

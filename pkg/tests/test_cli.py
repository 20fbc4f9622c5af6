import json
import subprocess
import sys

import pytest

from woagwo.harness.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


BASE = ["--runs", "2", "--pop", "6", "--iters", "10", "--dim", "4"]


def test_list_functions(capsys):
    code, out, _ = run_cli(capsys, "list-functions")
    assert code == 0
    assert out.splitlines()[0] == "id,name,dim,lower,upper,known_best,kind"
    assert len(out.strip().splitlines()) == 24


def test_run_writes_all_reports(tmp_path, capsys):
    out_dir = tmp_path / "o"
    code, out, err = run_cli(
        capsys, "run", "--algo", "woa", "--algo", "woagwo", "--functions", "1,9,16", *BASE, "--out", str(out_dir)
    )
    assert code == 0, err
    names = {p.name for p in out_dir.iterdir()}
    assert names == {"config.json", "raw_runs.csv", "summary.csv", "summary.md", "wilcoxon.csv", "boxdata.csv"}
    assert out.startswith("| Function | WOA avg")
    cfg = json.loads((out_dir / "config.json").read_text())
    assert cfg["algorithms"] == ["WOA", "WOAGWO"] and cfg["functions"] == [1, 9, 16]


def test_workers_do_not_change_files(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    args = ["run", "--algo", "gwo", "--algo", "woagwo", "--functions", "2,17", *BASE]
    assert run_cli(capsys, *args, "--out", str(a))[0] == 0
    assert run_cli(capsys, *args, "--out", str(b), "--workers", "2")[0] == 0
    for name in ("raw_runs.csv", "summary.csv", "summary.md", "wilcoxon.csv", "boxdata.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "exp.json"
    cfg.write_text(json.dumps({"algorithms": ["WOA"], "functions": [1], "runs": 5, "pop_size": 6, "max_iter": 8}))
    code, _, err = run_cli(capsys, "compare", "--config", str(cfg), "--runs", "2", "--out", str(tmp_path / "o"))
    assert code == 0, err
    saved = json.loads((tmp_path / "o" / "config.json").read_text())
    assert saved["runs"] == 2 and saved["max_iter"] == 8


def test_reports_from_raw_file(tmp_path, capsys):
    first = tmp_path / "first"
    run_cli(capsys, "run", "--algo", "woa", "--algo", "gwo", "--functions", "1,5", *BASE, "--out", str(first))
    raw = first / "raw_runs.csv"
    for cmd, name in (("compare", "summary.csv"), ("wilcoxon", "wilcoxon.csv"), ("boxdata", "boxdata.csv")):
        out_dir = tmp_path / cmd
        code, _, err = run_cli(capsys, cmd, "--raw", str(raw), "--out", str(out_dir))
        assert code == 0, err
        assert (out_dir / name).read_bytes() == (first / name).read_bytes()


def test_vessel_command(tmp_path, capsys):
    code, out, err = run_cli(
        capsys, "vessel", "--algo", "gwo", "--runs", "2", "--pop", "10", "--iters", "30",
        "--penalty", "static:1e5", "--out", str(tmp_path),
    )
    assert code == 0, err
    assert (tmp_path / "vessel.csv").exists() and (tmp_path / "vessel.md").exists()
    assert "best feasible cost" in out
    assert json.loads((tmp_path / "config.json").read_text())["penalty"] == "static:1e5"


def test_variant_flags_reach_config(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "compare", "--algo", "woagwo", "--functions", "1", *BASE, "--hunt-condition", "literal",
        "--fallback", "spiral", "--greedy-ref", "global", "--leader-update", "end_of_iteration",
        "--leader-rule", "best3", "--granularity", "per_dimension", "--a-form", "literal",
        "--seed", "0xFFFFFFFFFFFFFFFF", "--out", str(tmp_path),
    )
    assert code == 0, err
    cfg = json.loads((tmp_path / "config.json").read_text())
    assert cfg["hunt_condition"] == "literal" and cfg["exploitation_fallback"] == "spiral"
    assert cfg["greedy_reference"] == "global_best" and cfg["leader_update"] == "end_of_iteration"
    assert cfg["leader_rule"] == "best3" and cfg["gwo_coeff_granularity"] == "per_dimension"
    assert cfg["master_seed"] == 2**64 - 1


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--functions", "99", "--runs", "1"],
        ["run", "--penalty", "quadratic", "--suite", "vessel"],
        ["wilcoxon", "--algo", "woa", "--functions", "1", "--runs", "2", "--iters", "3"],
        ["compare", "--raw", "/nonexistent/raw_runs.csv"],
        ["run", "--config", "/nonexistent/config.json"],
        ["run", "--functions", "1", "--runs", "1", "--workers", "0"],
    ],
)
def test_failures_exit_nonzero_with_one_line(tmp_path, capsys, argv):
    code, _, err = run_cli(capsys, *argv, "--out", str(tmp_path))
    assert code != 0
    lines = err.strip().splitlines()
    assert len(lines) == 1 and "error" in lines[0]


def test_bad_flag_value_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--algo", "pso"])
    assert exc.value.code != 0


def test_module_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "woagwo", "list-functions"], capture_output=True, text=True, check=True
    )
    assert "six_hump_camel" in res.stdout

import json

import pytest

from composition_runs.cli import main
from composition_runs.commands import parse, validate_payload


def test_exact_two(cli_rows):
    rows = cli_rows("exact", "--n", "2")
    assert rows[["k", "count", "pmf", "cdf"]].values.tolist() == [
        ["1", "1", "0.5", "0.5"],
        ["2", "1", "0.5", "1.0"],
    ]


def test_exact_one(cli_rows):
    rows = cli_rows("exact", "--n", "1")
    assert rows[["k", "count", "pmf", "cdf"]].values.tolist() == [["1", "1", "1.0", "1.0"]]


def test_exact_sweep(cli_rows):
    rows = cli_rows("exact", "--sweep", "2:6:2")
    assert sorted(set(rows["n"])) == ["2", "4", "6"]
    assert len(rows) == 2 + 4 + 6


def test_exact_over_cap(run_cli, monkeypatch):
    monkeypatch.setenv("COMPOSITION_RUNS_SERIES_CAP", "10")
    code, out, err = run_cli("exact", "--n", "11")
    assert code == 1
    assert out == ""
    assert err.startswith("composition-runs: error[cap_exceeded]:")
    assert "10" in err


def test_rho_range(cli_rows):
    rows = cli_rows("rho", "--k", "2..10")
    rhos = [float(v) for v in rows["rho"]]
    assert rhos == sorted(rhos, reverse=True)
    assert all(0.5 < r < 0.6 for r in rhos)
    assert rows["isolation_proven"].tolist() == ["false"] * 2 + ["true"] * 7


def test_rho_degenerate(run_cli):
    code, _, err = run_cli("rho", "--k", "1")
    assert code == 1
    assert err.startswith("composition-runs: error[degenerate_k]:")


def test_rho_forty(cli_rows):
    rows = cli_rows("rho", "--k", "40")
    gap = float(rows.loc[0, "rho"]) - 0.5
    assert gap == pytest.approx(2.0**-43, rel=0.1)


def test_rho_infeasible_tolerance(run_cli):
    code, _, err = run_cli("rho", "--k", "5", "--tol", "1e-40", "--precision", "20")
    assert code == 1
    assert "error[no_convergence]" in err


def test_compare_small(cli_rows):
    rows = cli_rows("compare", "--n", "4")
    assert rows["k"].tolist() == ["1", "2", "3", "4", "5"]
    assert set(rows["region"]) <= {"central", "left-tail", "right-tail"}


def test_compare_central_error(cli_rows):
    rows = cli_rows("compare", "--n", "500")
    central = rows[rows["region"] == "central"]
    assert max(float(v) for v in central["abs_err"]) < 0.05


@pytest.mark.slow
def test_compare_error_shrinks(cli_rows):
    def worst(n):
        rows = cli_rows("compare", "--n", str(n))
        return max(float(v) for v in rows[rows["region"] == "central"]["abs_err"])

    assert worst(1024) < worst(256)


def test_moments_two(cli_rows):
    rows = cli_rows("moments", "--n", "2")
    assert rows.loc[0, "exact_mean"] == "1.5"


@pytest.mark.parametrize("flag", ["--curves", "--figure2"])
def test_moments_curves(cli_rows, flag):
    rows = cli_rows("moments", flag, "--from", "10", "--to", "10.5", "--step", "0.25")
    assert rows["lg_x"].tolist() == ["10.0", "10.25", "10.5"]


def test_rouche(cli_rows):
    rows = cli_rows("rouche", "--k", "4")
    assert rows.loc[0, "verdict"] == "true"
    assert float(rows.loc[0, "analytic_g_bound"]) == pytest.approx(0.2737, abs=1e-4)


def test_rouche_refused(run_cli):
    code, _, err = run_cli("rouche", "--k", "3")
    assert code == 1
    assert err.startswith("composition-runs: error[rouche_refused]:")


def test_simulate_is_byte_identical(run_cli):
    argv = ("simulate", "--n", "2", "--trials", "10000", "--seed", "7")
    first, second = run_cli(*argv), run_cli(*argv)
    assert first[0] == 0
    assert first[1] == second[1]
    rows = parse(first[1], "csv").rows
    mean = float(rows[rows["statistic"] == "L"]["mean"].iloc[0])
    assert abs(mean - 1.5) < 5 * 0.5 / 100


def test_simulate_single(cli_rows):
    rows = cli_rows("simulate", "--n", "1000", "--single", "--seed", "1..4", "--r-max", "10")
    assert sorted(set(rows["seed"])) == ["1", "2", "3", "4"]
    assert len(rows) == 40


def test_json_output_validates(run_cli):
    code, out, _ = run_cli("exact", "--n", "5", "--format", "json")
    assert code == 0
    validate_payload(json.loads(out))


def test_output_file(run_cli, tmp_path):
    target = tmp_path / "data" / "exact.csv"
    code, out, _ = run_cli("exact", "--n", "3", "--output", str(target))
    assert code == 0
    assert out == ""
    assert parse(target.read_text(), "csv").params["n"] == 3


def test_config_file_supplies_params(run_cli, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("n: 3\nformat: json\n")
    code, out, _ = run_cli("exact", "--config", str(config))
    assert code == 0
    assert parse(out, "json").params["n"] == 3

    code, out, _ = run_cli("exact", "--config", str(config), "--n", "4", "--format", "csv")
    assert parse(out, "csv").params["n"] == 4


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["exact", "--bogus"])
    assert exc.value.code == 2

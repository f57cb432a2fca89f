import csv
import io
import json
import subprocess
import sys

import pytest

from hypercurves import cli


def run(*argv):
    buf = io.StringIO()
    status = cli.run(list(argv), stdout=buf)
    return status, buf.getvalue()


def test_ledger_sweep_csv_columns():
    status, out = run("ledger", "sweep", "--n-from", "8", "--n-to", "12", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == list(range(8, 13))
    assert {"max_e_quadratic", "max_e_closed_form", "agreement"} <= set(rows[0])
    assert all(r["agreement"] in ("True", "False") for r in rows)
    assert status == cli.EXIT_DISCREPANCY


def test_ledger_shorthand():
    assert run("ledger", "--n", "10", "--format", "json") == run("ledger", "compute", "--n", "10", "--format", "json")


def test_hankel_discriminating_case():
    status, out = run("hankel", "verify", "--a", "1", "--b", "2", "--ell", "2", "--trials", "50", "--seed", "7", "--format", "json")
    rec = json.loads(out)["records"][0]
    assert rec["observed_codims"] == {"2": 50}
    assert rec["formula_min_abl"] == 1 and rec["formula_min_a1b1l"] == 2
    assert status == cli.EXIT_DISCREPANCY


def test_hankel_consistent_case_exits_zero():
    status, _ = run("hankel", "verify", "--a", "3", "--b", "3", "--ell", "2", "--trials", "10")
    assert status == cli.EXIT_OK


def test_hankel_rank():
    status, out = run("hankel", "rank", "--c", "1,2,4,8", "--a", "1", "--format", "json")
    rec = json.loads(out)["records"][0]
    assert rec["rank"] == 1 and rec["kernel_recheck_ok"]
    assert status == cli.EXIT_OK


def test_comb_connect():
    status, out = run("comb", "connect", "--e", "3", "--k", "3", "--format", "json")
    assert json.loads(out)["records"][0]["connected"] is True
    assert status == cli.EXIT_OK
    status, _ = run("comb", "connect", "--e", "3", "--k", "2")
    assert status == cli.EXIT_DISCREPANCY


def test_strata_audit():
    status, out = run("strata", "audit", "--n", "4", "--d", "3", "--format", "json")
    report = json.loads(out)
    assert [r["margin"] for r in report["records"]] == [2, 3, 2, 3]
    assert status == cli.EXIT_OK


def test_agraph_commands():
    status, out = run("agraph", "enum", "--e", "5", "--format", "json")
    assert status == cli.EXIT_OK and len(json.loads(out)["records"]) == 9
    status, out = run("agraph", "dim", "--kind", "tau0", "--e", "2", "--n", "5", "--format", "json")
    assert status == cli.EXIT_OK and json.loads(out)["records"][0]["expected_dim"] == 5


def test_agraph_validate_from_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("agraph\nvertex 0 beta=0\ntail 0 at 0\nend\n")
    status, out = run("agraph", "validate", "--graph", str(p))
    assert status == cli.EXIT_DISCREPANCY
    assert "stability" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("comb", "connect", "--e", "9", "--k", "3"),
        ("ledger", "compute", "--n", "8", "--d", "9"),
        ("strata", "audit", "--n", "4", "--d", "4"),
        ("hankel", "rank", "--c", "1,x", "--a", "1"),
        ("nonsense",),
    ],
)
def test_usage_errors_exit_one(argv, capsys):
    assert run(*argv)[0] == cli.EXIT_USAGE


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
@pytest.mark.parametrize(
    "argv",
    [
        ("hankel", "verify", "--a", "2", "--b", "3", "--ell", "3", "--trials", "20", "--seed", "4"),
        ("ledger", "sweep", "--n-from", "8", "--n-to", "20"),
        ("comb", "connect", "--e", "4", "--k", "3", "--reduced"),
        ("strata", "sweep", "--n-max", "8"),
    ],
)
def test_byte_identical_reruns(argv, fmt):
    assert run(*argv, "--format", fmt) == run(*argv, "--format", fmt)


def test_seed_from_environment(monkeypatch):
    argv = ("hankel", "verify", "--a", "2", "--b", "2", "--ell", "2", "--trials", "5", "--format", "json")
    monkeypatch.setenv(cli.SEED_ENV, "11")
    env_out = run(*argv)[1]
    monkeypatch.delenv(cli.SEED_ENV)
    assert env_out == run(*argv, "--seed", "11")[1]
    monkeypatch.setenv(cli.SEED_ENV, "eleven")
    assert run(*argv)[0] == cli.EXIT_USAGE


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    status, out = run("ledger", "compute", "--n", "8", "--format", "json", "--output", str(target))
    assert out == ""
    assert json.loads(target.read_text())["records"]


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "hypercurves", "comb", "connect", "--e", "3", "--k", "3", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout

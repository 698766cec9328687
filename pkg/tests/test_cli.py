"""Command-line interface."""

import json

import pytest
from typer.testing import CliRunner

from dicodim import __version__
from dicodim.cli.commands import app
from dicodim.config.schema import Config, OutputConfig

runner = CliRunner()


def run_json(*args: str) -> dict:
    result = runner.invoke(app, [*args, "--json"])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"dicodim v{__version__}" in result.stdout


def test_codim_json_report():
    payload = run_json("codim", "-v", "com", "-n", "3")
    assert payload["command"] == "codim"
    assert payload["inputs"] == {"variety": "com", "n": 3}
    assert [r["codim"] for r in payload["results"]] == [1, 1, 1]
    assert payload["results"][-1]["ideal_dim"] == 11
    assert payload["status"] == "ok"


def test_codim_csv_report():
    result = runner.invoke(app, ["codim", "-v", "perm", "-n", "3", "--csv"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "n,free_dim,ideal_dim,codim"
    assert lines[-1] == "3,12,9,3"


def test_codim_table_report():
    result = runner.invoke(app, ["codim", "-v", "lie", "-n", "3"])
    assert result.exit_code == 0
    assert "ok" in result.stdout


def test_json_and_csv_are_exclusive():
    result = runner.invoke(app, ["codim", "-v", "com", "-n", "2", "--json", "--csv"])
    assert result.exit_code == 2


def test_config_format_is_the_default(mocker):
    mocker.patch(
        "dicodim.config.loader.load_config",
        return_value=Config(output=OutputConfig(format="json")),
    )
    result = runner.invoke(app, ["codim", "-v", "com", "-n", "2"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["status"] == "ok"


def test_resource_limit_exit_code():
    result = runner.invoke(app, ["codim", "-v", "leib", "-n", "5", "--max-free-dim", "100"])
    assert result.exit_code == 3


def test_unknown_variety_exit_code():
    result = runner.invoke(app, ["codim", "-v", "no_such_variety", "-n", "2"])
    assert result.exit_code == 2


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.var"
    bad.write_text("ops: *\nidentity (x1 * x2 = 0\n")
    result = runner.invoke(app, ["codim", "-v", str(bad), "-n", "2"])
    assert result.exit_code == 2


def test_di_prints_presentation():
    result = runner.invoke(app, ["di", "-v", "com"])
    assert result.exit_code == 0
    assert "diops: (|-*, -|*)" in result.stdout
    assert result.stdout.count("identity") >= 4


def test_pre_single_op_writes_file(tmp_path):
    out = tmp_path / "out" / "zinbiel.var"
    result = runner.invoke(app, ["pre", "-v", "com", "--single-op", "-o", str(out)])
    assert result.exit_code == 0
    text = out.read_text()
    assert "ops: *" in text
    assert "identity" in text


def test_var_codim_of_p2():
    payload = run_json("var-codim", "-a", "p2", "-n", "3")
    assert [r["var_codim"] for r in payload["results"]] == [1, 2, 3]


def test_check_passes_and_fails():
    assert run_json("check", "-a", "p2", "-v", "perm")["status"] == "ok"
    result = runner.invoke(app, ["check", "-a", "lie_r2", "-v", "com", "--json"])
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["status"] == "failed"
    assert payload["results"][0]["holds"] is False
    assert payload["results"][0]["witness"]


def test_hat_report():
    payload = run_json("hat", "-a", "leib_cyclic")
    (row,) = payload["results"]
    assert (row["bar_dim"], row["hat_dim"]) == (1, 3)
    assert row["P2_embedding"] and row["P0_embedding"] and row["bounded"]


def test_hat_output_file(tmp_path):
    out = tmp_path / "hat.alg"
    result = runner.invoke(app, ["hat", "-a", "leib_cyclic", "-o", str(out)])
    assert result.exit_code == 0
    assert "basis e1_bar e1 e2" in out.read_text()


def test_theorem4_rows():
    payload = run_json("theorem4", "-a", "leib_cyclic", "-n", "3")
    assert [r["n"] for r in payload["results"]] == [2, 3]
    assert all(r["C1"] and r["C2"] for r in payload["results"])


@pytest.mark.parametrize(
    "args",
    [
        ["--lemma3", "--n", "3"],
        ["--zn-dim", "--n", "4"],
        ["--eq2", "-v", "com", "--n", "3"],
        ["--di-pois"],
        ["--corollary1", "-a", "lie_r2", "--n", "2"],
        ["--lemma1"],
    ],
)
def test_verify_modes(args):
    assert run_json("verify", *args)["status"] == "ok"


@pytest.mark.parametrize("args", [[], ["--lemma3", "--zn-dim"], ["--eq2"], ["--corollary1"]])
def test_verify_needs_one_complete_mode(args):
    result = runner.invoke(app, ["verify", *args])
    assert result.exit_code == 2


def test_zoo_commands():
    listing = runner.invoke(app, ["zoo", "list"])
    assert listing.exit_code == 0
    assert "perm" in listing.stdout
    shown = runner.invoke(app, ["zoo", "show", "com"])
    assert shown.exit_code == 0
    assert "identity" in shown.stdout
    assert runner.invoke(app, ["zoo", "show", "nothing"]).exit_code == 2


def test_config_init_and_show(isolated_home):
    result = runner.invoke(app, ["config", "init"])
    assert result.exit_code == 0
    assert (isolated_home / ".dicodim" / "config.yaml").exists()
    shown = runner.invoke(app, ["config", "show"])
    assert shown.exit_code == 0
    assert "max_free_dim" in shown.stdout


@pytest.mark.parametrize(
    "args",
    [
        ["hat", "-a", "p2"],
        ["check", "-a", "p2", "-v", "leib_di"],
        ["theorem4", "-a", "lie_r2", "-n", "2"],
    ],
)
def test_signature_mismatch_is_a_usage_error(args):
    result = runner.invoke(app, args)
    assert result.exit_code == 2
    assert isinstance(result.exception, SystemExit)


def test_lemma1_uses_configured_divided_power_degree(monkeypatch):
    monkeypatch.setenv("DICODIM_DEFAULTS__DIVIDED_POWER_DEGREE", "5")
    payload = run_json("verify", "--lemma1")
    labels = [r["Z"] for r in payload["results"]]
    assert "P2⊠divided_power(4)" in labels
    assert "P2⊠divided_power(5)" in labels
    assert "divided_power(5)⊠leib_cyclic" in labels
    assert payload["status"] == "ok"

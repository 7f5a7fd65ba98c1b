"""Fast smoke tests for the detour command line.

Checks command structure, option parsing and the exit codes of early failures;
nothing here runs a simulation. End-to-end runs live in
tests/integration/test_cli.py.
"""

import pytest
from click.testing import CliRunner

from matilda_detour.cli import cli as main
from matilda_detour.internal.hooks import EXIT_ERROR, EXIT_USAGE

pytestmark = pytest.mark.unit


def run_detour(args):
    return CliRunner().invoke(main, args)


class TestHelp:
    def test_lists_commands(self):
        result = run_detour(["--help"])
        assert result.exit_code == 0, result.output
        for command in ("run", "compare", "validate-seed", "replay", "render"):
            assert command in result.output

    @pytest.mark.parametrize(
        "command,options",
        [
            ("run", ["--seed-scenario", "--strategy", "--iterations", "--epsilon", "--delta-t", "--out", "--json"]),
            ("compare", ["--strategy", "--repeats", "--reference", "--epsilon", "--delta-t"]),
            ("validate-seed", ["--seed-scenario", "--map", "--planner-preset", "--grid-size"]),
            ("replay", ["--scenario", "--original", "--seed-scenario"]),
            ("render", ["--scenario", "--observation", "--out", "--grid-overlay"]),
        ],
    )
    def test_command_options(self, command, options):
        result = run_detour([command, "--help"])
        assert result.exit_code == 0, result.output
        for option in options:
            assert option in result.output, f"{option} missing from '{command} --help'"


class TestEarlyFailures:
    def test_unknown_strategy_is_a_usage_error(self, tmp_path):
        result = run_detour(["run", "-s", "S1", "--strategy", "annealing", "-o", str(tmp_path)])
        assert result.exit_code == EXIT_USAGE

    def test_missing_seed_is_a_usage_error(self, tmp_path):
        result = run_detour(["run", "-o", str(tmp_path)])
        assert result.exit_code == EXIT_USAGE

    def test_unknown_planner_preset(self, tmp_path):
        result = run_detour(["run", "-s", "S1", "--planner-preset", "reckless", "-o", str(tmp_path)])
        assert result.exit_code == EXIT_USAGE

    def test_bad_option_value(self):
        result = run_detour(["run", "--iterations", "-3"])
        assert result.exit_code == 2

    def test_missing_scenario_file(self, tmp_path):
        result = run_detour(["validate-seed", "-s", str(tmp_path / "missing.json"), "-o", str(tmp_path)])
        assert result.exit_code == EXIT_ERROR

    def test_replay_needs_an_original(self, tmp_path):
        result = run_detour(["replay", "--scenario", "S1"])
        assert result.exit_code == EXIT_USAGE

    def test_render_needs_input(self, tmp_path):
        result = run_detour(["render", "--out", str(tmp_path / "x.svg")])
        assert result.exit_code == EXIT_USAGE

    def test_bad_config_file(self, tmp_path):
        config = tmp_path / "detour.ini"
        config.write_text("[detour]\n")
        result = run_detour(["--config", str(config), "run", "-s", "S1"])
        assert result.exit_code == EXIT_USAGE


class TestRender:
    def test_render_bundled_seed(self, tmp_path):
        target = tmp_path / "s1.svg"
        result = run_detour(["render", "--scenario", "S1", "--out", str(target), "--no-grid-overlay"])
        assert result.exit_code == 0, result.output
        assert target.read_bytes().startswith(b"<?xml")

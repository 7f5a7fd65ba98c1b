"""Tests for the exception hierarchy and CLI error handling."""

import json

import pytest
import rich_click as click

from matilda_detour.core.exceptions import (
    BothEmptyError,
    CampaignError,
    ConfigError,
    ConfigFileError,
    ConfigurationError,
    DetourError,
    EmptyRegionError,
    GeometryError,
    InvariantError,
    IoError,
    MutationError,
    NoRouteError,
    OracleError,
    ReportError,
    SaturatedError,
    ScenarioError,
    ScenarioLoadError,
    ScenarioSaveError,
    SchemaError,
    SeedRejectedError,
    SimulationError,
    UnknownPlannerError,
    UnknownStrategyError,
)
from matilda_detour.internal.hooks import EXIT_ERROR, EXIT_SEED_REJECTED, EXIT_USAGE, exit_code_for, handle_error
from matilda_detour.scenario import Violation

pytestmark = pytest.mark.unit


class TestExceptionHierarchy:
    @pytest.mark.parametrize(
        "error,family",
        [
            (EmptyRegionError("feasible area"), GeometryError),
            (SchemaError("scenario", "extra field"), ScenarioError),
            (InvariantError(["bad"]), ScenarioError),
            (ScenarioLoadError("s.json", "missing"), ScenarioError),
            (ScenarioSaveError("s.json", "read-only"), ScenarioError),
            (NoRouteError("default"), SimulationError),
            (SaturatedError(6, 6), MutationError),
            (BothEmptyError(), OracleError),
            (ConfigError("engine", "bad"), ConfigurationError),
            (ConfigFileError("c.toml", "bad"), ConfigurationError),
            (UnknownStrategyError("x"), ConfigurationError),
            (UnknownPlannerError("x"), ConfigurationError),
            (SeedRejectedError("S1", "collision"), CampaignError),
            (IoError("out.svg", "denied"), ReportError),
        ],
    )
    def test_families(self, error, family):
        assert isinstance(error, family)
        assert isinstance(error, DetourError)
        assert error.message == str(error)

    def test_details(self):
        assert SeedRejectedError("S4", "timeout").details == {"seed_id": "S4", "reason": "timeout"}
        assert NoRouteError("timid", "goal blocked").details == {"planner": "timid", "reason": "goal blocked"}
        assert ConfigError("grid", "must be > 0", "cell_size").details["field"] == "cell_size"
        assert EmptyRegionError().details == {"context": None}
        assert DetourError("plain").details == {}

    def test_messages(self):
        assert "feasible area" in str(EmptyRegionError("feasible area"))
        assert "limit 3" in str(SaturatedError(3, 3))
        assert "guided, random" in str(UnknownStrategyError("x", ["guided", "random"]))

    def test_invariant_error_summarizes(self):
        violations = [Violation(f"p{i}", "speed", "negative speed") for i in range(5)]
        error = InvariantError(violations)
        assert error.violations == violations
        assert len(error.details["violations"]) == 5
        assert "(+2 more)" in error.message


class TestExitCodes:
    @pytest.mark.parametrize(
        "error,code",
        [
            (SeedRejectedError("S1", "stuck"), EXIT_SEED_REJECTED),
            (ConfigError("engine", "bad"), EXIT_USAGE),
            (UnknownStrategyError("x"), EXIT_USAGE),
            (click.UsageError("missing option"), EXIT_USAGE),
            (ScenarioLoadError("s.json", "missing"), EXIT_ERROR),
            (RuntimeError("boom"), EXIT_ERROR),
        ],
    )
    def test_exit_code_for(self, error, code):
        assert exit_code_for(error) == code

    def test_codes_are_distinct(self):
        assert len({EXIT_ERROR, EXIT_USAGE, EXIT_SEED_REJECTED}) == 3


class TestHandleError:
    def test_reraises(self):
        error = NoRouteError("default")
        with pytest.raises(NoRouteError):
            handle_error(error, {})

    def test_json_mode(self, capsys):
        error = SeedRejectedError("S2", "collision with npc-1")
        with pytest.raises(SeedRejectedError):
            handle_error(error, {"seed": "S2"}, json_mode=True)
        document = json.loads(capsys.readouterr().err)
        assert document["error_type"] == "SeedRejectedError"
        assert document["exit_code"] == EXIT_SEED_REJECTED
        assert document["details"]["seed_id"] == "S2"
        assert document["parameters"] == {"seed": "S2"}

"""End-to-end search campaigns on the two-lane map."""

import json

import pytest

from matilda_detour.config import BudgetSpec, EngineConfig, MutationConfig
from matilda_detour.core.exceptions import SeedRejectedError
from matilda_detour.core.types import Origin, Strategy
from matilda_detour.engine import (
    compare_strategies,
    result_json,
    run_campaign,
    simulate_seed,
    write_campaign,
)
from matilda_detour.engine.results import NODS_DIR, RESULT_FILE, SEED_OBSERVATION_FILE, TIMING_FILE
from matilda_detour.scenario import read_scenario
from matilda_detour.simulator import get_planner
from tests.utils import static_obstacle, straight_scenario

pytestmark = pytest.mark.integration


def with_(cfg, **update):
    return cfg.model_copy(update=update)


@pytest.fixture(scope="module")
def guided_result(road):
    cfg = EngineConfig(population_n=2, budget={"iterations": 2}, mutation=MutationConfig(delta_t=2.0, max_added=3))
    return cfg, run_campaign(straight_scenario(), road, get_planner("default"), cfg)


class TestRunCampaign:
    def test_counters_add_up(self, guided_result):
        cfg, result = guided_result
        assert result.iterations_run == 2
        assert len(result.log) == 2
        assert result.mutation_attempts == sum(entry.offspring for entry in result.log)
        assert 0 <= result.mutation_valid <= result.mutation_attempts
        assert 0.0 <= result.mutation_valid_pct <= 100.0
        assert len(result.population) == cfg.population_n
        assert result.log[-1].cumulative_nods == result.nods_count
        assert result.seed_observation is not None

    def test_nods_records_are_inconsistent(self, guided_result):
        cfg, result = guided_result
        for record in result.nods:
            assert not record.verdict.consistent
            assert record.verdict.similarity <= cfg.epsilon
            assert any(p.origin == Origin.ADDED for p in record.scenario.participants)
            assert record.scenario.id.startswith("straight-i")

    def test_same_seed_same_result(self, guided_result, road, planner):
        cfg, result = guided_result
        again = run_campaign(straight_scenario(), road, planner, cfg)
        assert result_json(again) == result_json(result)

    def test_threads_do_not_change_the_result(self, guided_result, road, planner):
        cfg, result = guided_result
        threaded = run_campaign(straight_scenario(), road, planner, with_(cfg, jobs=2))
        assert result_json(threaded) == result_json(result)

    def test_zero_iterations(self, fast_engine, road, planner):
        result = run_campaign(straight_scenario(), road, planner, with_(fast_engine, budget=BudgetSpec(iterations=0)))
        assert result.iterations_run == 0
        assert result.log == []
        assert result.population == ["straight", "straight"]

    @pytest.mark.parametrize("strategy", ["random", "random_delta", "without_rem", "f_con"])
    def test_strategies_run(self, fast_engine, road, planner, strategy):
        result = run_campaign(straight_scenario(), road, planner, with_(fast_engine, strategy=Strategy(strategy)))
        assert result.strategy == strategy
        assert result.iterations_run == 2


class TestSeedRejection:
    def test_invalid_seed(self, fast_engine, road, planner):
        blocked = straight_scenario([static_obstacle("cone", 2.0, 0.0)])
        with pytest.raises(SeedRejectedError) as exc_info:
            run_campaign(blocked, road, planner, fast_engine)
        assert exc_info.value.details["seed_id"] == "straight"

    def test_seed_that_does_not_complete(self, fast_engine, road, planner):
        with pytest.raises(SeedRejectedError) as exc_info:
            simulate_seed(straight_scenario(time_limit=2.0), road, planner, fast_engine)
        assert "timeout" in exc_info.value.details["reason"]


class TestOutputs:
    def test_write_campaign(self, tmp_path, guided_result):
        _, result = guided_result
        write_campaign(tmp_path, result)
        document = json.loads((tmp_path / RESULT_FILE).read_text())
        assert document["nods_count"] == result.nods_count
        assert len(document["log"]) == 2
        timing = json.loads((tmp_path / TIMING_FILE).read_text())
        assert timing["scenarios"] == result.mutation_attempts
        assert (tmp_path / SEED_OBSERVATION_FILE).exists()
        for record in result.nods:
            saved = read_scenario(tmp_path / NODS_DIR / record.scenario.id / "scenario.json")
            assert saved == record.scenario


class TestCompare:
    def test_table_shape(self, fast_engine, road, planner):
        table = compare_strategies(
            straight_scenario(), road, planner, ["guided", "random"], repeats=2, budget=1, cfg=fast_engine
        )
        assert table.reference == "guided"
        assert len(table.rows) == 4
        assert {r.rng_seed for r in table.rows} == {0, 1}
        assert len(table.curves) == 4
        summaries = {s.strategy: s for s in table.summaries}
        assert summaries["guided"].p_value is None
        assert 0.0 <= summaries["random"].p_value <= 1.0
        assert summaries["random"].runs == 2

    def test_sweep(self, fast_engine, road, planner):
        table = compare_strategies(
            straight_scenario(),
            road,
            planner,
            ["guided"],
            repeats=1,
            budget=1,
            cfg=fast_engine,
            epsilons=[0.5, 0.7],
            delta_ts=[1.0, 2.0],
        )
        assert {(r.epsilon, r.delta_t) for r in table.rows} == {(0.5, 1.0), (0.5, 2.0), (0.7, 1.0), (0.7, 2.0)}
        assert len(table.summaries) == 4

"""Tests for strategy dispatch: which mutation, feedback and selection each variant uses."""

import pytest

from matilda_detour.config import EngineConfig, SimConfig
from matilda_detour.core.exceptions import UnknownStrategyError
from matilda_detour.core.types import MutationOp, SelectionMode, Strategy
from matilda_detour.engine import FeedbackMode, MutationMode, parse_strategy, strategy_dispatch
from matilda_detour.feedback import Fitness
from matilda_detour.oracle import ConsistencyVerdict
from tests.utils import cruising_observation, ego_observation

pytestmark = pytest.mark.unit


def swerving_observation():
    points = [(float(x), 0.0) for x in range(0, 10)]
    points += [(float(x), 3.5) for x in range(10, 21)]
    points += [(float(x), 0.0) for x in range(21, 30)]
    return ego_observation(points, speeds=[5.0] * len(points))


def straight_observation():
    return ego_observation([(float(x), 0.0) for x in range(30)], speeds=[5.0] * 30)


class TestParseStrategy:
    @pytest.mark.parametrize(
        "name,expected",
        [
            ("guided", Strategy.GUIDED),
            ("F-Path", Strategy.F_PATH),
            ("  random-delta ", Strategy.RANDOM_DELTA),
            ("WITHOUT_REM", Strategy.WITHOUT_REM),
            ("RandomDelta", Strategy.RANDOM_DELTA),
            ("WithoutCons", Strategy.WITHOUT_CONS),
            ("WithoutMot", Strategy.WITHOUT_MOT),
            ("FRandom", Strategy.F_RANDOM),
            ("FBehavior", Strategy.F_BEHAVIOR),
            (Strategy.F_CON, Strategy.F_CON),
        ],
    )
    def test_names_are_normalized(self, name, expected):
        assert parse_strategy(name) is expected

    def test_unknown_strategy(self):
        with pytest.raises(UnknownStrategyError) as exc_info:
            parse_strategy("annealing")
        assert "guided" in str(exc_info.value.details)


class TestDispatch:
    @pytest.mark.parametrize(
        "strategy,mode,feedback,selection",
        [
            (Strategy.GUIDED, MutationMode.NON_INVASIVE, FeedbackMode.FULL, SelectionMode.TOP_N),
            (Strategy.RANDOM, MutationMode.RANDOM, FeedbackMode.NONE, SelectionMode.UNIFORM),
            (Strategy.RANDOM_DELTA, MutationMode.NON_INVASIVE, FeedbackMode.NONE, SelectionMode.UNIFORM),
            (Strategy.WITHOUT_CONS, MutationMode.RANDOM, FeedbackMode.FULL, SelectionMode.TOP_N),
            (Strategy.WITHOUT_MOT, MutationMode.NON_INVASIVE, FeedbackMode.FULL, SelectionMode.TOP_N),
            (Strategy.WITHOUT_REM, MutationMode.NON_INVASIVE, FeedbackMode.FULL, SelectionMode.TOP_N),
            (Strategy.F_RANDOM, MutationMode.NON_INVASIVE, FeedbackMode.FULL, SelectionMode.UNIFORM),
            (Strategy.F_CON, MutationMode.NON_INVASIVE, FeedbackMode.CONSISTENCY, SelectionMode.TOP_N),
            (Strategy.F_PATH, MutationMode.NON_INVASIVE, FeedbackMode.PATH, SelectionMode.TOP_N),
            (Strategy.F_BEHAVIOR, MutationMode.NON_INVASIVE, FeedbackMode.BEHAVIOR, SelectionMode.TOP_N),
        ],
    )
    def test_table(self, strategy, mode, feedback, selection):
        pipeline = strategy_dispatch(EngineConfig(), strategy)
        assert pipeline.strategy is strategy
        assert (pipeline.mutation_mode, pipeline.feedback, pipeline.selection) == (mode, feedback, selection)

    def test_uses_configured_strategy(self):
        assert strategy_dispatch(EngineConfig(strategy="f_con")).feedback == FeedbackMode.CONSISTENCY

    def test_configured_selection_is_kept(self):
        cfg = EngineConfig(selection=SelectionMode.ROULETTE)
        assert strategy_dispatch(cfg, Strategy.F_PATH).selection == SelectionMode.ROULETTE
        assert strategy_dispatch(cfg, Strategy.RANDOM).selection == SelectionMode.UNIFORM

    def test_without_motion_uses_one_step_windows(self):
        cfg = EngineConfig(sim=SimConfig(sim_dt=0.05, replan_period=0.5))
        pipeline = strategy_dispatch(cfg, "without_mot")
        assert pipeline.mutation.delta_t == 0.05
        assert cfg.mutation.delta_t == 2.0

    def test_without_removal_only_adds(self):
        weights = strategy_dispatch(EngineConfig(), "without_rem").mutation.op_weights
        assert weights == {MutationOp.ADD: 1.0, MutationOp.REMOVE: 0.0, MutationOp.CHANGE: 0.0}

    def test_other_strategies_share_the_config(self):
        cfg = EngineConfig()
        assert strategy_dispatch(cfg, "guided").mutation is cfg.mutation
        assert strategy_dispatch(cfg, "f_behavior").kernel is cfg.kernel


class TestPipelineScore:
    def test_no_feedback_scores_zero(self):
        pipeline = strategy_dispatch(EngineConfig(), Strategy.RANDOM)
        verdict = ConsistencyVerdict.judge(0.2, 0.6)
        assert pipeline.score(straight_observation(), swerving_observation(), verdict) == Fitness.zero()

    def test_consistency_feedback(self):
        pipeline = strategy_dispatch(EngineConfig(), Strategy.F_CON)
        score = pipeline.score(cruising_observation(), cruising_observation(), ConsistencyVerdict.judge(0.25, 0.6))
        assert score.f_con == pytest.approx(0.75)
        assert score.total == pytest.approx(0.75)

    def test_single_term_ablations(self):
        seed, candidate = straight_observation(), swerving_observation()
        verdict = ConsistencyVerdict.judge(0.4, 0.6)
        full = strategy_dispatch(EngineConfig(), Strategy.GUIDED).score(seed, candidate, verdict)
        path_only = strategy_dispatch(EngineConfig(), Strategy.F_PATH).score(seed, candidate, verdict)
        behavior_only = strategy_dispatch(EngineConfig(), Strategy.F_BEHAVIOR).score(seed, candidate, verdict)
        assert full.f_p > 0
        assert path_only == full.without_behavior()
        assert behavior_only == full.without_path()


class TestPipelineSelect:
    def test_top_n(self, rng):
        pipeline = strategy_dispatch(EngineConfig(), Strategy.GUIDED)
        assert pipeline.select([0.1, 0.9, 0.5, 0.7], 2, rng) == [1, 3]

    def test_uniform_ignores_fitness(self, rng):
        pipeline = strategy_dispatch(EngineConfig(), Strategy.F_RANDOM)
        picks = {tuple(sorted(pipeline.select([0.0, 0.0, 0.0, 100.0], 1, rng))) for _ in range(60)}
        assert len(picks) > 1

    def test_roulette(self, rng):
        pipeline = strategy_dispatch(EngineConfig(selection=SelectionMode.ROULETTE))
        assert pipeline.select([0.0, 0.0, 5.0], 1, rng) == [2]

"""Search campaigns: the NoDS search loop, strategy variants and comparisons."""

from .campaign import (
    Campaign,
    CampaignResult,
    IterationLog,
    Member,
    NoDSRecord,
    StageTiming,
    candidate_rng,
    resolve_grid,
    run_campaign,
    simulate_seed,
)
from .compare import CompareRow, ComparisonTable, CurvePoint, StrategySummary, compare_strategies, one_sided_p
from .results import ResultDoc, TimingDoc, result_json, write_campaign
from .strategies import FeedbackMode, MutationMode, Pipeline, parse_strategy, strategy_dispatch

__all__ = [
    "Campaign",
    "CampaignResult",
    "CompareRow",
    "ComparisonTable",
    "CurvePoint",
    "FeedbackMode",
    "IterationLog",
    "Member",
    "MutationMode",
    "NoDSRecord",
    "Pipeline",
    "ResultDoc",
    "StageTiming",
    "StrategySummary",
    "TimingDoc",
    "candidate_rng",
    "compare_strategies",
    "one_sided_p",
    "parse_strategy",
    "resolve_grid",
    "result_json",
    "run_campaign",
    "simulate_seed",
    "strategy_dispatch",
    "write_campaign",
]

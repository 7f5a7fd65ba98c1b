"""Fitness feedback (path distance and behavior MMD) and population selection."""

from .behavior import BehaviorSeries, Standardizer, bandwidth, behavior_series, mmd, raw_behavior
from .fitness import Fitness, fitness, rank_top_n, select_roulette, select_top_n, select_uniform
from .path import path_feedback

__all__ = [
    "BehaviorSeries",
    "Fitness",
    "Standardizer",
    "bandwidth",
    "behavior_series",
    "fitness",
    "mmd",
    "path_feedback",
    "rank_top_n",
    "raw_behavior",
    "select_roulette",
    "select_top_n",
    "select_uniform",
]

"""Behavior feedback: kernel MMD between ego (heading, speed, acceleration) series."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial.distance import cdist, pdist

from ..config.schema import KernelSpec
from ..core.exceptions import InvariantError
from ..scenario import Observation

MIN_STD = 1e-6


@dataclass(frozen=True, eq=False)
class BehaviorSeries:
    """One (heading, v, a) row per observation frame."""

    rows: np.ndarray

    def __post_init__(self) -> None:
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != 3 or rows.shape[0] < 2:
            raise InvariantError([f"behavior series needs at least 2 rows of 3 values, got shape {rows.shape}"])
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return int(self.rows.shape[0])


@dataclass(frozen=True, eq=False)
class Standardizer:
    mean: np.ndarray
    std: np.ndarray

    @classmethod
    def fit(cls, series: BehaviorSeries) -> "Standardizer":
        return cls(series.rows.mean(axis=0), np.maximum(series.rows.std(axis=0), MIN_STD))

    def apply(self, series: BehaviorSeries) -> BehaviorSeries:
        return BehaviorSeries((series.rows - self.mean) / self.std)


def raw_behavior(obs: Observation) -> BehaviorSeries:
    """Ego rows as recorded; headings are unwrapped so a U-turn does not jump by 2*pi."""
    rows = np.array([(s.ego.heading, s.ego.v, s.ego.a) for s in obs.scenes], dtype=float)
    rows[:, 0] = np.unwrap(rows[:, 0])
    return BehaviorSeries(rows)


def behavior_series(obs: Observation, seed_obs: Optional[Observation] = None) -> BehaviorSeries:
    """
    Standardized ego behavior of ``obs``.

    Each dimension is centered and scaled by the mean and std of the seed
    observation's series (``obs`` itself when no seed is given), with the std
    floored at 1e-6.
    """
    reference = raw_behavior(seed_obs if seed_obs is not None else obs)
    return Standardizer.fit(reference).apply(raw_behavior(obs))


def bandwidth(x: BehaviorSeries, y: BehaviorSeries, kernel: KernelSpec) -> float:
    if kernel.bandwidth != "median":
        return float(kernel.bandwidth)
    sigma = float(np.median(pdist(np.vstack((x.rows, y.rows)))))
    return sigma if sigma > 0 else 1.0


def mmd(x: BehaviorSeries, y: BehaviorSeries, kernel: Optional[KernelSpec] = None) -> float:
    """
    Square root of the biased (V-statistic) MMD^2 under an RBF kernel.

    The bandwidth is the median pairwise distance of the pooled rows unless the
    kernel fixes it; a zero median falls back to 1.0.
    """
    kernel = kernel or KernelSpec()
    sigma = bandwidth(x, y, kernel)
    scale = 2.0 * sigma * sigma
    k_xx = np.exp(-cdist(x.rows, x.rows, "sqeuclidean") / scale)
    k_yy = np.exp(-cdist(y.rows, y.rows, "sqeuclidean") / scale)
    k_xy = np.exp(-cdist(x.rows, y.rows, "sqeuclidean") / scale)
    mmd2 = k_xx.mean() + k_yy.mean() - 2.0 * k_xy.mean()
    return float(np.sqrt(max(0.0, mmd2)))


__all__ = ["BehaviorSeries", "Standardizer", "raw_behavior", "behavior_series", "bandwidth", "mmd"]

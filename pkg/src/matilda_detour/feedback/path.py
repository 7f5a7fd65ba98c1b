"""Path feedback: how far a candidate path strays from the optimal one."""

import numpy as np
from scipy.spatial.distance import cdist

from ..scenario import PathLike, path_array


def path_feedback(tau_star: PathLike, tau_prime: PathLike) -> float:
    """
    Mean over the candidate's points of the distance to the nearest optimal-path point.

    Averaged over ``tau_prime`` only, so the measure is not symmetric.
    """
    star = path_array(tau_star)
    prime = path_array(tau_prime)
    if len(star) == 0 or len(prime) == 0:
        raise ValueError("path_feedback needs two non-empty paths")
    return float(np.mean(cdist(prime, star).min(axis=1)))


__all__ = ["path_feedback"]

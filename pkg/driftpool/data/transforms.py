from typing import Tuple

import numpy as np

from driftpool.services.exceptions import ZeroVarianceSegment
from driftpool.services.validators import StatsScope


def normalize(
    values,
    stats_from: StatsScope = StatsScope.warm_segment,
    warm_ratio: float = 0.25,
) -> Tuple[np.ndarray, float, float]:
    """z-normalize with statistics from the warm-up segment (default, no peeking
    at the online stage) or from the whole series."""
    series = np.asarray(values, dtype=np.float64)
    stats_from = StatsScope(stats_from)
    if stats_from == StatsScope.none:
        return series.copy(), 0.0, 1.0

    segment = series[: int(len(series) * warm_ratio)] if stats_from == StatsScope.warm_segment else series
    mean = float(np.mean(segment)) if segment.size else 0.0
    std = float(np.std(segment)) if segment.size else 0.0
    if not std > 0:
        raise ZeroVarianceSegment(f"cannot normalize: the {stats_from.value} segment has zero variance")
    return (series - mean) / std, mean, std


def denormalize(values, mean: float, std: float) -> np.ndarray:
    return np.asarray(values, dtype=np.float64) * std + mean

import numpy as np
import pytest

from driftpool.data.transforms import denormalize, normalize
from driftpool.services.exceptions import ZeroVarianceSegment


def test_warm_segment_statistics():
    values = np.concatenate([np.array([1.0, 3.0]), np.full(6, 100.0)])
    series, mean, std = normalize(values, stats_from="warm_segment", warm_ratio=0.25)
    assert (mean, std) == (2.0, 1.0)
    assert series[:2].tolist() == [-1.0, 1.0]


def test_whole_series_statistics():
    values = np.random.default_rng(1).normal(5.0, 2.0, size=1000)
    series, _, _ = normalize(values, stats_from="whole")
    assert np.mean(series) == pytest.approx(0.0, abs=1e-12)
    assert np.std(series) == pytest.approx(1.0)


def test_none_keeps_the_series():
    values = np.array([1.0, 2.0, 3.0])
    series, mean, std = normalize(values, stats_from="none")
    assert (mean, std) == (0.0, 1.0)
    assert series.tolist() == values.tolist()
    assert series is not values


def test_denormalize_recovers_the_series():
    values = np.random.default_rng(2).normal(50.0, 7.0, size=400)
    series, mean, std = normalize(values)
    np.testing.assert_allclose(denormalize(series, mean, std), values, rtol=1e-12)


def test_constant_segment_cannot_be_normalized():
    with pytest.raises(ZeroVarianceSegment):
        normalize(np.concatenate([np.zeros(25), np.arange(75.0)]), stats_from="warm_segment")

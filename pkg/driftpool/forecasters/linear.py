from typing import Optional

import numpy as np

from driftpool.forecasters.base import BaseForecaster, Parameters


class LinearForecaster(BaseForecaster):
    """forecast = weights @ window + bias, zero initialised."""

    def __init__(
        self,
        lookback: int,
        horizon: int,
        weights: Optional[np.ndarray] = None,
        bias: Optional[np.ndarray] = None,
    ):
        super().__init__(lookback=lookback, horizon=horizon)
        self.weights = np.zeros((horizon, lookback), dtype=np.float64)
        self.bias = np.zeros(horizon, dtype=np.float64)
        if weights is not None:
            self.weights[...] = weights
        if bias is not None:
            self.bias[...] = bias

    def parameters(self) -> Parameters:
        return {"weights": self.weights, "bias": self.bias}

    def _forward(self, window: np.ndarray) -> np.ndarray:
        return self.weights @ window + self.bias

    def gradients(self, window: np.ndarray, truth: np.ndarray) -> Parameters:
        error = self._forward(window) - truth
        d_forecast = 2.0 * error / self.horizon
        return {
            "weights": np.outer(d_forecast, window),
            "bias": d_forecast,
        }

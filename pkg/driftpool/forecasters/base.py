import copy
import hashlib
from abc import ABC, abstractmethod
from typing import Dict

import numpy as np

from driftpool.services.exceptions import NumericError, ShapeError

Parameters = Dict[str, np.ndarray]


class BaseForecaster(ABC):
    """contract shared by every forecaster the pool can hold.

    a forecaster maps a look-back window of length `lookback` to a forecast
    of length `horizon` and learns with one plain SGD step on the MSE per
    call to `train_step`.
    """

    def __init__(self, lookback: int, horizon: int):
        self.lookback = lookback
        self.horizon = horizon

    def parameters(self) -> Parameters:
        """named parameter arrays; mutating them mutates the forecaster."""
        return {}

    @abstractmethod
    def _forward(self, window: np.ndarray) -> np.ndarray:
        ...

    def gradients(self, window: np.ndarray, truth: np.ndarray) -> Parameters:
        """analytic gradient of the MSE with respect to every parameter."""
        return {}

    def predict(self, window) -> np.ndarray:
        x = self._check_window(window)
        forecast = self._forward(x)
        if not np.all(np.isfinite(forecast)):
            raise NumericError("forecast is not finite")
        return forecast

    def loss(self, window, truth) -> float:
        y = self._check_truth(truth)
        forecast = self._forward(self._check_window(window))
        return float(np.mean((forecast - y) ** 2))

    def train_step(self, window, truth, lr: float) -> float:
        """one gradient step; returns the MSE measured before the update."""
        if lr < 0:
            raise ValueError(f"learning rate must be >= 0, got {lr}")
        x = self._check_window(window)
        y = self._check_truth(truth)

        loss = self.loss(x, y)
        if not np.isfinite(loss):
            raise NumericError(f"training loss is not finite: {loss}")

        if lr > 0:
            params = self.parameters()
            for name, grad in self.gradients(x, y).items():
                params[name] -= lr * grad
        return loss

    def deep_clone(self) -> "BaseForecaster":
        return copy.deepcopy(self)

    def parameter_checksum(self) -> str:
        digest = hashlib.sha256()
        for name, value in sorted(self.parameters().items()):
            digest.update(name.encode("utf-8"))
            digest.update(np.ascontiguousarray(value, dtype=np.float64).tobytes())
        return digest.hexdigest()

    def _check_window(self, window) -> np.ndarray:
        x = np.asarray(window, dtype=np.float64)
        if x.shape != (self.lookback,):
            raise ShapeError(f"window must have shape ({self.lookback},), got {x.shape}")
        return x

    def _check_truth(self, truth) -> np.ndarray:
        y = np.asarray(truth, dtype=np.float64)
        if y.shape != (self.horizon,):
            raise ShapeError(f"truth must have shape ({self.horizon},), got {y.shape}")
        return y

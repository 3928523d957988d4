import numpy as np

from driftpool.forecasters.base import BaseForecaster, Parameters


class MlpForecaster(BaseForecaster):
    """one tanh hidden layer of width `hidden`.

    parameters are drawn uniformly from (-1/sqrt(fan_in), 1/sqrt(fan_in))
    with a seeded generator, so equal seeds give equal forecasters.
    """

    def __init__(self, lookback: int, horizon: int, hidden: int = 32, seed: int = 0):
        super().__init__(lookback=lookback, horizon=horizon)
        self.hidden = hidden
        rng = np.random.default_rng(seed)

        bound_in = 1.0 / np.sqrt(lookback)
        bound_hidden = 1.0 / np.sqrt(hidden)
        self.w_in = rng.uniform(-bound_in, bound_in, size=(hidden, lookback))
        self.b_in = rng.uniform(-bound_in, bound_in, size=hidden)
        self.w_out = rng.uniform(-bound_hidden, bound_hidden, size=(horizon, hidden))
        self.b_out = rng.uniform(-bound_hidden, bound_hidden, size=horizon)

    def parameters(self) -> Parameters:
        return {
            "w_in": self.w_in,
            "b_in": self.b_in,
            "w_out": self.w_out,
            "b_out": self.b_out,
        }

    def _hidden(self, window: np.ndarray) -> np.ndarray:
        return np.tanh(self.w_in @ window + self.b_in)

    def _forward(self, window: np.ndarray) -> np.ndarray:
        return self.w_out @ self._hidden(window) + self.b_out

    def gradients(self, window: np.ndarray, truth: np.ndarray) -> Parameters:
        activation = self._hidden(window)
        error = self.w_out @ activation + self.b_out - truth
        d_forecast = 2.0 * error / self.horizon
        d_pre = (self.w_out.T @ d_forecast) * (1.0 - activation**2)
        return {
            "w_in": np.outer(d_pre, window),
            "b_in": d_pre,
            "w_out": np.outer(d_forecast, activation),
            "b_out": d_forecast,
        }

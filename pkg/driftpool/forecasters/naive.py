import numpy as np

from driftpool.forecasters.base import BaseForecaster


class NaiveForecaster(BaseForecaster):
    """repeats the last observed value over the horizon; never learns."""

    def _forward(self, window: np.ndarray) -> np.ndarray:
        return np.full(self.horizon, window[-1], dtype=np.float64)

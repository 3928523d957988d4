from driftpool.forecasters.base import BaseForecaster
from driftpool.forecasters.linear import LinearForecaster
from driftpool.forecasters.mlp import MlpForecaster
from driftpool.forecasters.naive import NaiveForecaster
from driftpool.services.validators import ForecasterKind


def generate_forecaster(
    kind: ForecasterKind,
    lookback: int,
    horizon: int,
    hidden: int = 32,
    seed: int = 0,
) -> BaseForecaster:
    kind = ForecasterKind(kind)
    if kind == ForecasterKind.naive:
        return NaiveForecaster(lookback=lookback, horizon=horizon)
    elif kind == ForecasterKind.mlp:
        return MlpForecaster(lookback=lookback, horizon=horizon, hidden=hidden, seed=seed)
    else:
        return LinearForecaster(lookback=lookback, horizon=horizon)


__all__ = [
    "BaseForecaster",
    "LinearForecaster",
    "MlpForecaster",
    "NaiveForecaster",
    "generate_forecaster",
]

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Set the path to the project root
path_to_module = Path(__file__).resolve().parents[1]

# Add the path to the system path
sys.path.insert(0, str(path_to_module))

# Set the PYTHONPATH environment variable
os.environ["PYTHONPATH"] = os.pathsep.join(sys.path)

from driftpool.data.synthetic import generate  # noqa: E402
from driftpool.schemas.config import CepConfig, EngineConfig  # noqa: E402
from driftpool.schemas.synthetic import ConceptSpec, SyntheticSpec  # noqa: E402


def step_spec(seed: int = 0) -> SyntheticSpec:
    """N(0, 1) for 1500 points, then N(10, 1) for 900."""
    return SyntheticSpec(
        concepts=[ConceptSpec(level=0.0, noise_sigma=1.0), ConceptSpec(level=10.0, noise_sigma=1.0)],
        schedule=[(0, 1500), (1, 900)],
        seed=seed,
    )


def recurring_spec(seed: int = 0) -> SyntheticSpec:
    """A for 1200 points, B for 900, A again for 900."""
    return SyntheticSpec(
        concepts=[ConceptSpec(level=0.0, noise_sigma=1.0), ConceptSpec(level=10.0, noise_sigma=1.0)],
        schedule=[(0, 1200), (1, 900), (0, 900)],
        seed=seed,
    )


@pytest.fixture
def step_series() -> np.ndarray:
    return generate(step_spec()).values


@pytest.fixture
def recurring_stream():
    return generate(recurring_spec())


@pytest.fixture
def naive_config() -> EngineConfig:
    return EngineConfig(forecaster="naive", lookback=60, horizon=30, cep=CepConfig(tau_e=3.0), shadow_oracle=True)


@pytest.fixture
def linear_config() -> EngineConfig:
    return EngineConfig(forecaster="linear", lookback=60, horizon=30, shadow_oracle=True)

"""statistical genes: (mean, std) signatures of data windows.

a gene is the concept identity of a window. forecasters in the pool carry a
local gene, tracked by an exponential moving average of instance genes, and
a global gene, the running population moments of every instance mean the
forecaster absorbed. all functions here are pure; values are replaced, never
mutated.
"""
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from driftpool.services.exceptions import (
    ConfigurationError,
    EmptyWindow,
    InternalStateError,
    NonFiniteInput,
    NumericError,
)

SIGMA_FLOOR = 1e-8

Window = Union[Sequence[float], np.ndarray]


@dataclass(frozen=True)
class GeneVector:
    mu: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise NumericError(f"gene components must be finite, got ({self.mu}, {self.sigma})")
        if self.sigma < 0:
            raise NumericError(f"gene sigma must be >= 0, got {self.sigma}")

    def as_array(self) -> np.ndarray:
        return np.array([self.mu, self.sigma], dtype=np.float64)


@dataclass(frozen=True)
class GeneState:
    local: GeneVector
    global_: GeneVector
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InternalStateError(f"gene state count must be >= 1, got {self.n}")

    @classmethod
    def seed(cls, gene: GeneVector) -> "GeneState":
        return cls(local=gene, global_=gene, n=1)


def floored(sigma: float) -> float:
    return max(sigma, SIGMA_FLOOR)


def compute_gene(window: Window, scope: int) -> GeneVector:
    """population mean and std (divisor n) of the last `scope` values."""
    values = np.asarray(window, dtype=np.float64)
    if values.size == 0:
        raise EmptyWindow("empty window")
    if scope < 1:
        raise ConfigurationError(f"scope must be >= 1, got {scope}")
    if not np.all(np.isfinite(values)):
        raise NonFiniteInput("non-finite input")

    tail = values[-scope:]
    return GeneVector(mu=float(np.mean(tail)), sigma=float(np.std(tail)))


def ema_update(local: GeneVector, instance_gene: GeneVector, tau_l: float) -> GeneVector:
    if not 0.0 < tau_l <= 1.0:
        raise ConfigurationError(f"tau_l must lie in (0, 1], got {tau_l}")

    return GeneVector(
        mu=tau_l * instance_gene.mu + (1.0 - tau_l) * local.mu,
        sigma=tau_l * instance_gene.sigma + (1.0 - tau_l) * local.sigma,
    )


def global_update(global_: GeneVector, n: int, instance_gene: GeneVector) -> Tuple[GeneVector, int]:
    """absorb one instance mean into the running population moments.

    only the instance mean enters; the global sigma is the dispersion of the
    absorbed means.
    """
    if n < 1:
        raise InternalStateError(f"global gene count must be >= 1, got {n}")

    total = n + 1
    mu = (n * global_.mu + instance_gene.mu) / total
    variance = (n / total) * global_.sigma**2 + (n / total**2) * (global_.mu - instance_gene.mu) ** 2
    return GeneVector(mu=mu, sigma=math.sqrt(variance)), total


def mix_gene(
    state: GeneState,
    tau_gene: float,
    use_local: bool = True,
    use_global: bool = True,
) -> GeneVector:
    if not 0.0 <= tau_gene <= 1.0:
        raise ConfigurationError(f"tau_gene must lie in [0, 1], got {tau_gene}")
    if not (use_local or use_global):
        raise ConfigurationError("at least one gene part must be enabled")

    if not use_global:
        return state.local
    if not use_local:
        return state.global_

    weight = tau_gene
    return GeneVector(
        mu=weight * state.local.mu + (1.0 - weight) * state.global_.mu,
        sigma=weight * state.local.sigma + (1.0 - weight) * state.global_.sigma,
    )


def gene_distance(a: GeneVector, b: GeneVector) -> float:
    return math.hypot(a.mu - b.mu, a.sigma - b.sigma)


def mle_cost(candidate: GeneVector, sample: GeneVector) -> float:
    """negative log-likelihood of the sample moments under N(mu_k, sigma_k^2),
    up to constants and the window length factor."""
    sigma_k = floored(candidate.sigma)
    if not sigma_k > 0:
        raise NumericError(f"candidate sigma must be > 0, got {candidate.sigma}")

    variance_k = sigma_k**2
    return 2.0 * math.log(sigma_k) + sample.sigma**2 / variance_k + (sample.mu - candidate.mu) ** 2 / variance_k

from typing import Optional

from pydantic import Field, root_validator, validator

from driftpool.schemas.base import BaseSchemaConfig
from driftpool.services.validators import ForecasterKind, RetrievalScore

DEFAULT_LEARNING_RATES = {
    ForecasterKind.naive.value: 0.0,
    ForecasterKind.linear.value: 0.01,
    ForecasterKind.mlp.value: 0.003,
}


class CepConfig(BaseSchemaConfig):
    tau_mu: float = Field(default=3.0, title="mean threshold")
    tau_gene: float = Field(default=0.8, title="local gene weight in the mixed gene")
    tau_l: float = Field(default=0.2, title="local gene EMA ratio")
    tau_safe: int = Field(default=15, title="safety period in predictions")
    tau_e: float = Field(default=1.5, title="elimination threshold")
    tau_lr: float = Field(default=0.5, title="learning rate adjustment ratio")
    t_lr: int = Field(default=15, title="learning rate warming time")
    scope_s: Optional[int] = Field(default=None, title="gene scope, defaults to the look-back")
    retrieval_score: RetrievalScore = RetrievalScore.euclidean

    evolution: bool = True
    elimination: bool = True
    gradient_abandonment: bool = True
    optimizer_adjustment: bool = True
    use_local_gene: bool = True
    use_global_gene: bool = True

    max_pool_size: Optional[int] = None

    @validator("tau_mu", "tau_e")
    def _positive(cls, value, field):
        if not value > 0:
            raise ValueError(f"{field.name} must be > 0, got {value}")
        return value

    @validator("tau_gene")
    def _unit_interval(cls, value):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"tau_gene must lie in [0, 1], got {value}")
        return value

    @validator("tau_l", "tau_lr")
    def _half_open_unit_interval(cls, value, field):
        if not 0.0 < value <= 1.0:
            raise ValueError(f"{field.name} must lie in (0, 1], got {value}")
        return value

    @validator("tau_safe")
    def _non_negative(cls, value):
        if value < 0:
            raise ValueError(f"tau_safe must be >= 0, got {value}")
        return value

    @validator("t_lr", "scope_s", "max_pool_size")
    def _at_least_one(cls, value, field):
        if value is not None and value < 1:
            raise ValueError(f"{field.name} must be >= 1, got {value}")
        return value

    @root_validator(skip_on_failure=True)
    def _one_gene_part(cls, values):
        if not values.get("use_local_gene") and not values.get("use_global_gene"):
            raise ValueError("at least one of use_local_gene / use_global_gene must be enabled")
        return values

    def scope(self, lookback: int) -> int:
        """points a gene is computed over: scope_s, or the whole look-back."""
        return self.scope_s or lookback


class EngineConfig(BaseSchemaConfig):
    lookback: int = Field(default=60, title="look-back window length L")
    horizon: int = Field(default=30, title="forecast horizon H")
    forecaster: ForecasterKind = ForecasterKind.linear
    hidden: int = Field(default=32, title="MLP hidden width")
    lr: Optional[float] = Field(default=None, title="raw learning rate, defaults per forecaster kind")
    warmup_epochs: int = 5
    warm_ratio: float = 0.25
    seed: int = 0
    log_forecasts: bool = False
    record_trajectories: bool = True
    shadow_oracle: Optional[bool] = None
    cep: CepConfig = Field(default_factory=CepConfig)

    @validator("lookback", "horizon", "hidden")
    def _positive_length(cls, value, field):
        if value < 1:
            raise ValueError(f"{field.name} must be >= 1, got {value}")
        return value

    @validator("lr")
    def _non_negative_lr(cls, value):
        if value is not None and value < 0:
            raise ValueError(f"lr must be >= 0, got {value}")
        return value

    @validator("warmup_epochs")
    def _non_negative_epochs(cls, value):
        if value < 0:
            raise ValueError(f"warmup_epochs must be >= 0, got {value}")
        return value

    @validator("warm_ratio")
    def _open_unit_interval(cls, value):
        if not 0.0 < value < 1.0:
            raise ValueError(f"warm_ratio must lie in (0, 1), got {value}")
        return value

    @property
    def lr_raw(self) -> float:
        if self.lr is not None:
            return self.lr
        return DEFAULT_LEARNING_RATES[ForecasterKind(self.forecaster).value]

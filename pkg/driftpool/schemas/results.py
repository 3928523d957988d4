from typing import Dict, List, Optional

from pydantic import Field

from driftpool.schemas.base import BaseSchemaResult
from driftpool.services.validators import PoolEventKind


class InstanceRecord(BaseSchemaResult):
    t: int = Field(title="stream index of the input window start")
    selected_entry_id: int
    mse: float
    evolved: bool = False
    evolved_from: Optional[int] = None
    abandoned: bool = False
    eliminated_ids: List[int] = Field(default_factory=list)
    evicted_ids: List[int] = Field(default_factory=list)
    pool_size: int
    forecast: Optional[List[float]] = None


class PoolEvent(BaseSchemaResult):
    t: int
    kind: PoolEventKind
    entry_id: int
    parent_id: Optional[int] = None


class TrajectoryPoint(BaseSchemaResult):
    t: int
    entry_id: int
    mu: float
    sigma: float


class EntrySnapshot(BaseSchemaResult):
    id: int
    parent_id: Optional[int] = None
    local_mu: Optional[float] = None
    local_sigma: Optional[float] = None
    global_mu: Optional[float] = None
    global_sigma: Optional[float] = None
    n: Optional[int] = None
    n_pred: int
    n_wait: int
    lr_current: float
    checksum: str


class RunSummary(BaseSchemaResult):
    mean_mse: float
    n_instances: int
    final_pool_size: int
    total_evolutions: int
    total_eliminations: int
    total_evictions: int
    total_abandoned: int


class RunResult(BaseSchemaResult):
    summary: RunSummary
    records: List[InstanceRecord]
    events: List[PoolEvent] = Field(default_factory=list)
    trajectories: List[TrajectoryPoint] = Field(default_factory=list)
    pool: List[EntrySnapshot] = Field(default_factory=list)
    warmup_losses: List[float] = Field(default_factory=list)


class ResultsBundle(BaseSchemaResult):
    schema_version: int
    config_hash: str
    baseline: bool = False
    manifest: Dict[str, str]
    result: RunResult


class ComparisonRow(BaseSchemaResult):
    label: str
    config_hash: str
    baseline: bool = False
    mean_mse: float
    delta: str = Field(title="percentage change of the mean MSE against the first row")
    total_evolutions: int
    total_eliminations: int
    final_pool_size: int


class EntryPurity(BaseSchemaResult):
    entry_id: int
    majority_label: int
    served: int
    matched: int


class PurityReport(BaseSchemaResult):
    purity: float
    n_scored: int
    n_excluded: int
    entries: List[EntryPurity] = Field(default_factory=list)

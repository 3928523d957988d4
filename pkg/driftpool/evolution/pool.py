import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from driftpool.evolution.gene import (
    GeneState,
    GeneVector,
    ema_update,
    floored,
    gene_distance,
    global_update,
    mix_gene,
    mle_cost,
)
from driftpool.forecasters.base import BaseForecaster
from driftpool.schemas.config import CepConfig
from driftpool.services.exceptions import ConfigurationError, InternalStateError, RetrievalMismatch
from driftpool.services.validators import RetrievalScore

logger = logging.getLogger(__name__)


@dataclass
class PoolEntry:
    id: int
    forecaster: BaseForecaster
    genes: GeneState
    lr_current: float
    lr_warm_steps_remaining: int = 0
    n_pred: int = 0
    n_wait: int = 0
    parent_id: Optional[int] = None


def entry_gene(entry: PoolEntry, config: CepConfig) -> GeneVector:
    return mix_gene(
        entry.genes,
        config.tau_gene,
        use_local=config.use_local_gene,
        use_global=config.use_global_gene,
    )


def retrieval_scorer(config: CepConfig) -> Callable[[PoolEntry, GeneVector], float]:
    if RetrievalScore(config.retrieval_score) == RetrievalScore.mle:
        return lambda entry, sample: mle_cost(entry_gene(entry, config), sample)
    return lambda entry, sample: gene_distance(sample, entry_gene(entry, config))


def should_evolve(entry: PoolEntry, sample_gene: GeneVector, config: CepConfig) -> bool:
    """three-sigma split test, gated by the evolution switch and the safety period."""
    if not config.evolution:
        return False
    if entry.n_pred < config.tau_safe:
        return False
    gene = entry_gene(entry, config)
    return abs(sample_gene.mu - gene.mu) > config.tau_mu * floored(gene.sigma)


def lr_tick(entry: PoolEntry, lr_raw: float, config: CepConfig) -> float:
    """restore the learning rate of a freshly evolved entry towards lr_raw.

    each tick multiplies by tau_lr^(-1/t_lr); after t_lr ticks the entry is
    back at exactly lr_raw.
    """
    if not config.tau_lr > 0:
        raise ConfigurationError(f"tau_lr must be > 0, got {config.tau_lr}")

    if entry.lr_warm_steps_remaining > 0:
        entry.lr_warm_steps_remaining -= 1
        if entry.lr_warm_steps_remaining == 0:
            entry.lr_current = lr_raw
            return entry.lr_current

    growth = config.tau_lr ** (-1.0 / config.t_lr)
    entry.lr_current = min(lr_raw, growth * entry.lr_current)
    return entry.lr_current


def absorb_instance(entry: PoolEntry, instance_gene: GeneVector, config: CepConfig) -> None:
    local = ema_update(entry.genes.local, instance_gene, config.tau_l)
    global_, n = global_update(entry.genes.global_, entry.genes.n, instance_gene)
    entry.genes = GeneState(local=local, global_=global_, n=n)


@dataclass
class Pool:
    config: CepConfig
    lr_raw: float
    entries: List[PoolEntry] = field(default_factory=list)
    shadow_oracle: bool = False
    _next_id: int = 0

    @classmethod
    def initialize(
        cls,
        forecaster: BaseForecaster,
        gene: GeneVector,
        config: CepConfig,
        lr_raw: float,
        shadow_oracle: bool = False,
    ) -> "Pool":
        pool = cls(config=config, lr_raw=lr_raw, shadow_oracle=shadow_oracle)
        pool._append(forecaster=forecaster, genes=GeneState.seed(gene), lr_current=lr_raw)
        return pool

    def __len__(self) -> int:
        return len(self.entries)

    def nearest(self, sample_gene: GeneVector) -> PoolEntry:
        """entry whose mixed gene scores lowest against the sample; ties go to
        the smallest id."""
        if not self.entries:
            raise InternalStateError("cannot retrieve from an empty pool!")

        score = retrieval_scorer(self.config)
        best, best_score = self.entries[0], score(self.entries[0], sample_gene)
        for entry in self.entries[1:]:
            candidate = score(entry, sample_gene)
            if candidate < best_score:
                best, best_score = entry, candidate

        if self.shadow_oracle:
            scanned = min(self.entries, key=lambda e: (score(e, sample_gene), e.id))
            if scanned.id != best.id:
                raise RetrievalMismatch(f"nearest returned entry {best.id}, exhaustive scan found {scanned.id}")
        return best

    def evolve(self, parent: PoolEntry, sample_gene: GeneVector) -> Tuple[PoolEntry, List[int]]:
        """split a child off `parent`; returns the child and any ids evicted by
        the FIFO cap."""
        if self.config.optimizer_adjustment:
            lr_current = self.config.tau_lr * self.lr_raw
            warm_steps = self.config.t_lr
        else:
            lr_current, warm_steps = self.lr_raw, 0

        child = self._append(
            forecaster=parent.forecaster.deep_clone(),
            genes=GeneState.seed(sample_gene),
            lr_current=lr_current,
            lr_warm_steps_remaining=warm_steps,
            parent_id=parent.id,
        )
        logger.debug(
            "entry %d evolved from entry %d at gene (%.4f, %.4f)",
            child.id,
            parent.id,
            sample_gene.mu,
            sample_gene.sigma,
        )

        evicted = []
        max_size = self.config.max_pool_size
        while max_size is not None and len(self.entries) > max_size:
            oldest = min((e for e in self.entries if e.id != child.id), key=lambda e: e.id)
            self.entries.remove(oldest)
            evicted.append(oldest.id)
            logger.debug("entry %d evicted by the pool size cap", oldest.id)
        return child, evicted

    def mark_selected(self, selected: PoolEntry) -> None:
        for entry in self.entries:
            if entry is selected:
                entry.n_pred += 1
                entry.n_wait = 0
            else:
                entry.n_wait += 1

    def eliminate_stale(self, current: PoolEntry) -> List[int]:
        """drop idle entries with n_wait > tau_e * n_pred; `current` always
        survives so the pool never empties."""
        if not self.config.elimination:
            return []

        removed = [
            entry.id
            for entry in self.entries
            if entry is not current and entry.n_wait > self.config.tau_e * entry.n_pred
        ]
        if removed:
            self.entries = [entry for entry in self.entries if entry.id not in removed]
            logger.debug("eliminated idle entries %s", removed)
        return removed

    def _append(
        self,
        forecaster: BaseForecaster,
        genes: GeneState,
        lr_current: float,
        lr_warm_steps_remaining: int = 0,
        parent_id: Optional[int] = None,
    ) -> PoolEntry:
        entry = PoolEntry(
            id=self._next_id,
            forecaster=forecaster,
            genes=genes,
            lr_current=lr_current,
            lr_warm_steps_remaining=lr_warm_steps_remaining,
            parent_id=parent_id,
        )
        self._next_id += 1
        self.entries.append(entry)
        return entry

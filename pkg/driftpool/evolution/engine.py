"""warm-up and online stages of the evolution pool.

the series is split by time index into a warm-up segment, walked with
stride 1, and an online segment, walked with stride H so that no ground
truth overlaps an earlier forecast.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from driftpool.core.config import settings
from driftpool.evolution.gene import compute_gene
from driftpool.evolution.pool import Pool, absorb_instance, entry_gene, lr_tick, should_evolve
from driftpool.forecasters import BaseForecaster, generate_forecaster
from driftpool.schemas.config import CepConfig, EngineConfig
from driftpool.schemas.results import (
    EntrySnapshot,
    InstanceRecord,
    PoolEvent,
    RunResult,
    RunSummary,
    TrajectoryPoint,
)
from driftpool.services.exceptions import EmptyWarmupSet, InternalStateError, NonFiniteInput, SeriesTooShort
from driftpool.services.validators import PoolEventKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    x: np.ndarray
    y: np.ndarray
    t: int


def enumerate_instances(
    series: np.ndarray,
    lookback: int,
    horizon: int,
    stride: int,
    start: int = 0,
    stop: Optional[int] = None,
) -> List[Instance]:
    """windows (x, y) inside [start, stop); the last one is dropped when y
    would run past `stop`."""
    stop = len(series) if stop is None else stop
    instances = []
    t = start
    while t + lookback + horizon <= stop:
        instances.append(
            Instance(
                x=series[t : t + lookback],
                y=series[t + lookback : t + lookback + horizon],
                t=t,
            )
        )
        t += stride
    return instances


def warm_split(length: int, warm_ratio: float) -> int:
    return int(length * warm_ratio)


def minimum_series_length(lookback: int, horizon: int, warm_ratio: float) -> int:
    span = lookback + horizon
    length = 2 * span
    while True:
        warm = warm_split(length, warm_ratio)
        if warm >= span and length - warm >= span:
            return length
        length += 1


def split_instances(series: np.ndarray, config: EngineConfig) -> Tuple[List[Instance], List[Instance]]:
    lookback, horizon = config.lookback, config.horizon
    length = len(series)
    warm_length = warm_split(length, config.warm_ratio)
    if warm_length < lookback + horizon or length - warm_length < lookback + horizon:
        minimum = minimum_series_length(lookback, horizon, config.warm_ratio)
        raise SeriesTooShort(
            f"series of length {length} is too short for lookback={lookback}, horizon={horizon} "
            f"and warm_ratio={config.warm_ratio}; the minimum length is {minimum}"
        )

    warm = enumerate_instances(series, lookback, horizon, stride=1, start=0, stop=warm_length)
    online = enumerate_instances(series, lookback, horizon, stride=horizon, start=warm_length, stop=length)
    return warm, online


def warm_up(
    pool: Pool,
    warm_instances: Sequence[Instance],
    epochs: int,
    lr_raw: float,
    allow_empty: bool = False,
) -> List[float]:
    """conventional training of the initial forecaster; returns the mean loss
    of every epoch."""
    if len(pool) != 1:
        raise InternalStateError(f"warm-up expects a pool of exactly one entry, got {len(pool)}")
    if not warm_instances:
        if allow_empty:
            return []
        raise EmptyWarmupSet("the warm-up stage received no instances")

    entry = pool.entries[0]
    config = pool.config
    epoch_losses = []
    for epoch in range(epochs):
        losses = []
        for instance in warm_instances:
            scope = config.scope(len(instance.x))
            instance_gene = compute_gene(instance.x, scope)
            losses.append(entry.forecaster.train_step(instance.x, instance.y, lr_raw))
            absorb_instance(entry, instance_gene, config)
            entry.n_pred += 1
        epoch_losses.append(float(np.mean(losses)))
        logger.debug("warm-up epoch %d: mean loss %.6f", epoch + 1, epoch_losses[-1])
    return epoch_losses


def online_step(
    pool: Pool,
    instance: Instance,
    config: CepConfig,
    log_forecast: bool = False,
) -> InstanceRecord:
    scope = config.scope(len(instance.x))
    input_gene = compute_gene(instance.x, scope)

    nearest = pool.nearest(input_gene)
    evicted: List[int] = []
    if should_evolve(nearest, input_gene, config):
        current, evicted = pool.evolve(nearest, input_gene)
        evolved = True
    else:
        current, evolved = nearest, False

    forecast = current.forecaster.predict(instance.x)
    mse = float(np.mean((forecast - instance.y) ** 2))

    truth_gene = compute_gene(instance.y, scope)
    abandoned = config.gradient_abandonment and should_evolve(current, truth_gene, config)
    if abandoned:
        logger.debug("t=%d: ground truth left the concept of entry %d, gradient abandoned", instance.t, current.id)
    else:
        current.forecaster.train_step(instance.x, instance.y, current.lr_current)
        lr_tick(current, pool.lr_raw, config)
        absorb_instance(current, input_gene, config)

    pool.mark_selected(current)
    eliminated = pool.eliminate_stale(current)

    return InstanceRecord(
        t=instance.t,
        selected_entry_id=current.id,
        mse=mse,
        evolved=evolved,
        evolved_from=nearest.id if evolved else None,
        abandoned=abandoned,
        eliminated_ids=eliminated,
        evicted_ids=evicted,
        pool_size=len(pool),
        forecast=forecast.tolist() if log_forecast else None,
    )


def summarize(records: Sequence[InstanceRecord], final_pool_size: int) -> RunSummary:
    return RunSummary(
        mean_mse=float(np.mean([record.mse for record in records])),
        n_instances=len(records),
        final_pool_size=final_pool_size,
        total_evolutions=sum(record.evolved for record in records),
        total_eliminations=sum(len(record.eliminated_ids) for record in records),
        total_evictions=sum(len(record.evicted_ids) for record in records),
        total_abandoned=sum(record.abandoned for record in records),
    )


def snapshot_pool(pool: Pool) -> List[EntrySnapshot]:
    return [
        EntrySnapshot(
            id=entry.id,
            parent_id=entry.parent_id,
            local_mu=entry.genes.local.mu,
            local_sigma=entry.genes.local.sigma,
            global_mu=entry.genes.global_.mu,
            global_sigma=entry.genes.global_.sigma,
            n=entry.genes.n,
            n_pred=entry.n_pred,
            n_wait=entry.n_wait,
            lr_current=entry.lr_current,
            checksum=entry.forecaster.parameter_checksum(),
        )
        for entry in pool.entries
    ]


def _prepare(series: Sequence[float]) -> np.ndarray:
    values = np.asarray(series, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise NonFiniteInput("series contains non-finite values")
    return values


def _build_forecaster(config: EngineConfig) -> BaseForecaster:
    return generate_forecaster(
        kind=config.forecaster,
        lookback=config.lookback,
        horizon=config.horizon,
        hidden=config.hidden,
        seed=config.seed,
    )


def run(series: Sequence[float], config: EngineConfig) -> RunResult:
    values = _prepare(series)
    warm, online = split_instances(values, config)
    cep = config.cep
    shadow = settings.DEBUG if config.shadow_oracle is None else config.shadow_oracle

    scope = cep.scope(config.lookback)
    pool = Pool.initialize(
        forecaster=_build_forecaster(config),
        gene=compute_gene(warm[0].x, scope),
        config=cep,
        lr_raw=config.lr_raw,
        shadow_oracle=shadow,
    )
    logger.info("warm-up on %d instances for %d epochs", len(warm), config.warmup_epochs)
    warmup_losses = warm_up(pool, warm, epochs=config.warmup_epochs, lr_raw=config.lr_raw)

    events = [PoolEvent(t=online[0].t, kind=PoolEventKind.created, entry_id=pool.entries[0].id)]
    trajectories: List[TrajectoryPoint] = []
    records: List[InstanceRecord] = []

    logger.info("online stage on %d instances", len(online))
    for instance in online:
        record = online_step(pool, instance, cep, log_forecast=config.log_forecasts)
        records.append(record)

        if record.evolved:
            events.append(
                PoolEvent(
                    t=record.t,
                    kind=PoolEventKind.evolved,
                    entry_id=record.selected_entry_id,
                    parent_id=record.evolved_from,
                )
            )
        events.extend(PoolEvent(t=record.t, kind=PoolEventKind.evicted, entry_id=i) for i in record.evicted_ids)
        events.extend(PoolEvent(t=record.t, kind=PoolEventKind.eliminated, entry_id=i) for i in record.eliminated_ids)

        if config.record_trajectories:
            for entry in pool.entries:
                gene = entry_gene(entry, cep)
                trajectories.append(TrajectoryPoint(t=record.t, entry_id=entry.id, mu=gene.mu, sigma=gene.sigma))

    summary = summarize(records, final_pool_size=len(pool))
    logger.info(
        "mean online MSE %.6f, %d evolutions, %d eliminations, final pool size %d",
        summary.mean_mse,
        summary.total_evolutions,
        summary.total_eliminations,
        summary.final_pool_size,
    )
    return RunResult(
        summary=summary,
        records=records,
        events=events,
        trajectories=trajectories,
        pool=snapshot_pool(pool),
        warmup_losses=warmup_losses,
    )


def run_baseline(series: Sequence[float], config: EngineConfig) -> RunResult:
    """the bare forecaster under the same split and delayed-feedback protocol:
    no genes, no pool, one SGD step at lr_raw per online instance."""
    values = _prepare(series)
    warm, online = split_instances(values, config)
    forecaster = _build_forecaster(config)
    lr_raw = config.lr_raw

    warmup_losses = []
    for _ in range(config.warmup_epochs):
        losses = [forecaster.train_step(instance.x, instance.y, lr_raw) for instance in warm]
        warmup_losses.append(float(np.mean(losses)))

    records = []
    n_pred = len(warm) * config.warmup_epochs
    for instance in online:
        forecast = forecaster.predict(instance.x)
        mse = float(np.mean((forecast - instance.y) ** 2))
        forecaster.train_step(instance.x, instance.y, lr_raw)
        n_pred += 1
        records.append(
            InstanceRecord(
                t=instance.t,
                selected_entry_id=0,
                mse=mse,
                pool_size=1,
                forecast=forecast.tolist() if config.log_forecasts else None,
            )
        )

    return RunResult(
        summary=summarize(records, final_pool_size=1),
        records=records,
        events=[PoolEvent(t=online[0].t, kind=PoolEventKind.created, entry_id=0)],
        pool=[
            EntrySnapshot(
                id=0,
                n_pred=n_pred,
                n_wait=0,
                lr_current=lr_raw,
                checksum=forecaster.parameter_checksum(),
            )
        ],
        warmup_losses=warmup_losses,
    )

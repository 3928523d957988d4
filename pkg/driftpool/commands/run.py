import argparse
import logging
from pathlib import Path
from typing import Dict, List

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from driftpool.commands.options import add_manifest_arguments, manifest_from_args
from driftpool.core.config import settings
from driftpool.data.loader import write_csv
from driftpool.data.sources import prepare_series
from driftpool.evolution.engine import run, run_baseline
from driftpool.schemas.manifest import RunManifest
from driftpool.schemas.results import ResultsBundle
from driftpool.services.exceptions import DataSourceError, DriftPoolError
from driftpool.services.messages import (
    cli_exc_2_invalid_synthetic_spec,
    cli_exc_3_run_failed,
    cli_exc_4_io_failure,
)

logger = logging.getLogger(__name__)

RESULTS_FILE = "results.json"
RECORDS_FILE = "records.csv"
TRAJECTORIES_FILE = "trajectories.csv"
EVENTS_FILE = "events.csv"
MANIFEST_FILE = "manifest.txt"


def execute_manifest(manifest: RunManifest, baseline: bool = False) -> ResultsBundle:
    """run one manifest end to end without touching the disk for output."""
    try:
        series = prepare_series(manifest)
    except ValidationError as spec_error:
        raise cli_exc_2_invalid_synthetic_spec(spec_error)
    except (DataSourceError, OSError) as io_error:
        raise cli_exc_4_io_failure(manifest.data or manifest.synthetic, io_error)
    except DriftPoolError as data_error:
        raise cli_exc_3_run_failed(data_error)

    try:
        result = run_baseline(series, manifest.engine) if baseline else run(series, manifest.engine)
    except DriftPoolError as engine_error:
        raise cli_exc_3_run_failed(engine_error)

    return ResultsBundle(
        schema_version=settings.RESULTS_SCHEMA_VERSION,
        config_hash=manifest.config_hash(),
        baseline=baseline,
        manifest=manifest.to_pairs(),
        result=result,
    )


def write_bundle(bundle: ResultsBundle, out: str) -> List[Path]:
    directory = Path(out)
    result = bundle.result
    try:
        directory.mkdir(parents=True, exist_ok=True)
        results_path = directory / RESULTS_FILE
        results_path.write_text(bundle.json(by_alias=True, indent=2), encoding="utf-8")

        records_path = write_csv(
            directory / RECORDS_FILE,
            {
                "t": [r.t for r in result.records],
                "selected_entry_id": [r.selected_entry_id for r in result.records],
                "mse": [r.mse for r in result.records],
                "evolved": [int(r.evolved) for r in result.records],
                "abandoned": [int(r.abandoned) for r in result.records],
                "pool_size": [r.pool_size for r in result.records],
            },
        )
        trajectories_path = write_csv(
            directory / TRAJECTORIES_FILE,
            {
                "t": [p.t for p in result.trajectories],
                "entry_id": [p.entry_id for p in result.trajectories],
                "mu": [p.mu for p in result.trajectories],
                "sigma": [p.sigma for p in result.trajectories],
            },
        )
        events_path = write_csv(
            directory / EVENTS_FILE,
            {
                "t": [e.t for e in result.events],
                "kind": [e.kind for e in result.events],
                "entry_id": [e.entry_id for e in result.events],
                "parent_id": [-1 if e.parent_id is None else e.parent_id for e in result.events],
            },
        )
        manifest_path = directory / MANIFEST_FILE
        manifest_path.write_text("".join(f"{k} = {v}\n" for k, v in bundle.manifest.items()), encoding="utf-8")
    except OSError as io_error:
        raise cli_exc_4_io_failure(str(directory), io_error)

    return [results_path, records_path, trajectories_path, events_path, manifest_path]


def read_bundle(path: str) -> ResultsBundle:
    target = Path(path)
    if target.is_dir():
        target = target / RESULTS_FILE
    try:
        return ResultsBundle.parse_file(target)
    except (OSError, ValueError) as io_error:
        raise cli_exc_4_io_failure(str(target), io_error)


def cmd_run(manifest: RunManifest, baseline: bool = False) -> ResultsBundle:
    bundle = execute_manifest(manifest, baseline=baseline)
    if manifest.out:
        for path in write_bundle(bundle, manifest.out):
            logger.info("wrote %s", path)
    return bundle


def summary_table(bundle: ResultsBundle) -> Table:
    summary = bundle.result.summary
    table = Table(title="baseline run" if bundle.baseline else "evolution pool run")
    table.add_column("metric")
    table.add_column("value", justify="right")
    rows: Dict[str, str] = {
        "config hash": bundle.config_hash[:12],
        "online instances": str(summary.n_instances),
        "mean online MSE": f"{summary.mean_mse:.6f}",
        "evolutions": str(summary.total_evolutions),
        "eliminations": str(summary.total_eliminations),
        "evictions": str(summary.total_evictions),
        "abandoned steps": str(summary.total_abandoned),
        "final pool size": str(summary.final_pool_size),
    }
    for metric, value in rows.items():
        table.add_row(metric, value)
    return table


def handle(args: argparse.Namespace, console: Console) -> int:
    manifest = manifest_from_args(args)
    bundle = cmd_run(manifest, baseline=args.baseline)
    console.print(summary_table(bundle))
    return 0


def register(subparsers, metadata: Dict[str, str]) -> None:
    parser = subparsers.add_parser("run", help=metadata["help"], description=metadata["description"])
    parser.add_argument("--config", help="manifest file of `key = value` lines")
    parser.add_argument("--baseline", action="store_true", help="run the bare forecaster without the pool")
    add_manifest_arguments(parser)
    parser.set_defaults(handler=handle)

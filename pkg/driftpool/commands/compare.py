import argparse
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from rich.console import Console
from rich.table import Table

from driftpool.commands.options import read_manifest
from driftpool.commands.run import execute_manifest
from driftpool.core.config import settings
from driftpool.data.loader import write_csv
from driftpool.schemas.manifest import RunManifest
from driftpool.schemas.results import ComparisonRow, ResultsBundle
from driftpool.services.exceptions import ManifestMismatch
from driftpool.services.formatters import format_percentage_delta
from driftpool.services.messages import (
    cli_exc_2_invalid_argument,
    cli_exc_2_manifest_mismatch,
    cli_exc_4_io_failure,
)

COMPARISON_FILE = "comparison.csv"


def _execute(job) -> ResultsBundle:
    manifest, baseline = job
    return execute_manifest(manifest, baseline=baseline)


def execute_all(manifests: Sequence[RunManifest], baselines: Sequence[bool], jobs: int = 1) -> List[ResultsBundle]:
    """runs share nothing, so they may go to worker processes; results keep
    the manifest order."""
    work = list(zip(manifests, baselines))
    if jobs <= 1 or len(work) <= 1:
        return [_execute(job) for job in work]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_execute, work))


def build_rows(labels: Sequence[str], bundles: Sequence[ResultsBundle]) -> List[ComparisonRow]:
    reference = bundles[0].result.summary.mean_mse
    return [
        ComparisonRow(
            label=label,
            config_hash=bundle.config_hash,
            baseline=bundle.baseline,
            mean_mse=bundle.result.summary.mean_mse,
            delta=format_percentage_delta(bundle.result.summary.mean_mse, reference),
            total_evolutions=bundle.result.summary.total_evolutions,
            total_eliminations=bundle.result.summary.total_eliminations,
            final_pool_size=bundle.result.summary.final_pool_size,
        )
        for label, bundle in zip(labels, bundles)
    ]


def cmd_compare(
    manifests: Sequence[RunManifest],
    labels: Optional[Sequence[str]] = None,
    baseline_first: bool = False,
    jobs: int = 1,
) -> List[ComparisonRow]:
    if len(manifests) < 2:
        raise cli_exc_2_invalid_argument("compare needs at least two manifests!")

    differing = sorted({key for manifest in manifests[1:] for key in manifests[0].differing_keys(manifest)})
    if differing:
        raise ManifestMismatch(differing)

    labels = list(labels) if labels else [f"run-{position}" for position in range(len(manifests))]
    baselines = [baseline_first and position == 0 for position in range(len(manifests))]
    bundles = execute_all(manifests, baselines, jobs=jobs)
    return build_rows(labels, bundles)


def write_rows(rows: Sequence[ComparisonRow], path: Path) -> Path:
    try:
        return write_csv(
            path,
            {
                "label": [row.label for row in rows],
                "config_hash": [row.config_hash for row in rows],
                "baseline": [int(row.baseline) for row in rows],
                "mean_mse": [row.mean_mse for row in rows],
                "delta": [row.delta for row in rows],
                "total_evolutions": [row.total_evolutions for row in rows],
                "total_eliminations": [row.total_eliminations for row in rows],
                "final_pool_size": [row.final_pool_size for row in rows],
            },
        )
    except OSError as io_error:
        raise cli_exc_4_io_failure(str(path), io_error)


def comparison_table(rows: Sequence[ComparisonRow], title: str = "comparison") -> Table:
    table = Table(title=title)
    for column in ("run", "config hash", "mean MSE", "delta", "evolutions", "eliminations", "final pool"):
        table.add_column(column, justify="left" if column in ("run", "config hash") else "right")
    for row in rows:
        table.add_row(
            f"{row.label} (baseline)" if row.baseline else row.label,
            row.config_hash[:12],
            f"{row.mean_mse:.6f}",
            row.delta,
            str(row.total_evolutions),
            str(row.total_eliminations),
            str(row.final_pool_size),
        )
    return table


def handle(args: argparse.Namespace, console: Console) -> int:
    manifests = [read_manifest(path) for path in args.manifests]
    try:
        rows = cmd_compare(
            manifests,
            labels=[Path(path).stem for path in args.manifests],
            baseline_first=args.baseline_first,
            jobs=args.jobs or settings.DEFAULT_JOBS,
        )
    except ManifestMismatch as mismatch:
        raise cli_exc_2_manifest_mismatch(mismatch.fields)
    console.print(comparison_table(rows))
    if args.out:
        write_rows(rows, Path(args.out) / COMPARISON_FILE)
    return 0


def register(subparsers, metadata: Dict[str, str]) -> None:
    parser = subparsers.add_parser("compare", help=metadata["help"], description=metadata["description"])
    parser.add_argument("manifests", nargs="+", help="manifest files; deltas are measured against the first")
    parser.add_argument("--baseline-first", action="store_true", help="run the first manifest as the bare forecaster")
    parser.add_argument("--jobs", type=int, help="parallel worker processes")
    parser.add_argument("--out", help="directory for comparison.csv")
    parser.set_defaults(handler=handle)

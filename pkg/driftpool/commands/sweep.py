import argparse
from pathlib import Path
from typing import Dict, List, Sequence

from rich.console import Console

from driftpool.commands.compare import build_rows, comparison_table, execute_all, write_rows
from driftpool.commands.options import add_manifest_arguments, collect_overrides, read_manifest
from driftpool.core.config import settings
from driftpool.schemas.manifest import CEP_KEYS, RunManifest
from driftpool.schemas.results import ComparisonRow
from driftpool.services.messages import cli_exc_2_invalid_argument

SWEEP_FILE = "sweep.csv"
SWEEPABLE_KEYS = CEP_KEYS + ["lr", "warmup_epochs", "hidden"]


def sweep_manifests(config_path, overrides: Dict[str, str], knob: str, values: Sequence[str]) -> List[RunManifest]:
    if knob not in SWEEPABLE_KEYS:
        raise cli_exc_2_invalid_argument(f"cannot sweep `{knob}`; choose one of: {', '.join(SWEEPABLE_KEYS)}")
    if not values:
        raise cli_exc_2_invalid_argument("sweep needs at least one value")
    return [read_manifest(config_path, {**overrides, knob: value}) for value in values]


def cmd_sweep(manifests: Sequence[RunManifest], knob: str, values: Sequence[str], jobs: int = 1) -> List[ComparisonRow]:
    """sensitivity of one knob: one run per value, deltas against the first value."""
    bundles = execute_all(manifests, [False] * len(manifests), jobs=jobs)
    return build_rows([f"{knob}={value}" for value in values], bundles)


def handle(args: argparse.Namespace, console: Console) -> int:
    values = [value.strip() for value in args.values.split(",") if value.strip()]
    manifests = sweep_manifests(args.config, collect_overrides(args), args.knob, values)
    rows = cmd_sweep(manifests, args.knob, values, jobs=args.jobs or settings.DEFAULT_JOBS)
    console.print(comparison_table(rows, title=f"sensitivity of {args.knob}"))
    if manifests[0].out:
        write_rows(rows, Path(manifests[0].out) / SWEEP_FILE)
    return 0


def register(subparsers, metadata: Dict[str, str]) -> None:
    parser = subparsers.add_parser("sweep", help=metadata["help"], description=metadata["description"])
    parser.add_argument("--config", help="manifest file of `key = value` lines")
    parser.add_argument("--knob", required=True, help="manifest key to vary, e.g. tau_mu")
    parser.add_argument("--values", required=True, help="comma-separated values, e.g. 1,2,3,4,5")
    parser.add_argument("--jobs", type=int, help="parallel worker processes")
    add_manifest_arguments(parser)
    parser.set_defaults(handler=handle)

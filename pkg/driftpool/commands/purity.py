"""how cleanly the pool separates concepts.

each online instance takes the label of its input window (majority label
of the L points it covers); an entry's majority label is the most common
label among the instances it served, ties broken by the smallest label.
purity is the share of scored instances served by an entry whose majority
label equals the instance's own label.
"""
import argparse
from collections import Counter, defaultdict
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from rich.console import Console
from rich.table import Table

from driftpool.commands.run import read_bundle
from driftpool.data.loader import load_csv
from driftpool.schemas.results import EntryPurity, PurityReport, ResultsBundle
from driftpool.services.exceptions import DataSourceError, LabelMismatch
from driftpool.services.messages import cli_exc_2_invalid_argument, cli_exc_4_io_failure
from driftpool.services.validators import PoolEventKind


def instance_label(labels: np.ndarray, t: int, lookback: int) -> Tuple[int, bool]:
    """majority label of the window [t, t + lookback) and whether the window
    straddles a concept boundary."""
    window = labels[t : t + lookback]
    values, counts = np.unique(window, return_counts=True)
    return int(values[np.argmax(counts)]), values.size > 1


def compute_purity(entry_ids: Sequence[int], instance_labels: Sequence[int]) -> PurityReport:
    if len(entry_ids) != len(instance_labels):
        raise LabelMismatch(f"{len(entry_ids)} served instances but {len(instance_labels)} labels")

    served: Dict[int, Counter] = defaultdict(Counter)
    for entry_id, label in zip(entry_ids, instance_labels):
        served[entry_id][label] += 1

    entries: List[EntryPurity] = []
    matched_total = 0
    for entry_id in sorted(served):
        counts = served[entry_id]
        majority, matched = min(counts.items(), key=lambda item: (-item[1], item[0]))
        entries.append(
            EntryPurity(
                entry_id=entry_id,
                majority_label=majority,
                served=sum(counts.values()),
                matched=matched,
            )
        )
        matched_total += matched

    n_scored = len(entry_ids)
    return PurityReport(
        purity=matched_total / n_scored if n_scored else 1.0,
        n_scored=n_scored,
        n_excluded=0,
        entries=entries,
    )


def _safety_instances(bundle: ResultsBundle, tau_safe: int) -> Set[int]:
    """positions of the records served by an evolved entry during its first
    tau_safe online selections."""
    evolved = {event.entry_id for event in bundle.result.events if event.kind == PoolEventKind.evolved}
    seen: Counter = Counter()
    positions = set()
    for position, record in enumerate(bundle.result.records):
        entry_id = record.selected_entry_id
        if entry_id in evolved:
            if seen[entry_id] < tau_safe:
                positions.add(position)
            seen[entry_id] += 1
    return positions


def cmd_purity(
    bundle: ResultsBundle,
    labels: np.ndarray,
    exclude_safe: bool = False,
    exclude_straddling: bool = False,
) -> PurityReport:
    records = bundle.result.records
    lookback = int(bundle.manifest["lookback"])
    if not records:
        raise LabelMismatch("the results hold no online instances")
    last = max(record.t for record in records) + lookback
    if len(labels) < last:
        raise LabelMismatch(f"labels cover {len(labels)} points but the run reads up to point {last}")

    skipped = _safety_instances(bundle, int(bundle.manifest["tau_safe"])) if exclude_safe else set()

    entry_ids: List[int] = []
    instance_labels: List[int] = []
    for position, record in enumerate(records):
        label, straddles = instance_label(labels, record.t, lookback)
        if position in skipped or (straddles and exclude_straddling):
            continue
        entry_ids.append(record.selected_entry_id)
        instance_labels.append(label)

    report = compute_purity(entry_ids, instance_labels)
    report.n_excluded = len(records) - report.n_scored
    return report


def read_labels(path: str, column: Optional[str] = "label") -> np.ndarray:
    try:
        source = load_csv(path, column=column)
    except DataSourceError as io_error:
        raise cli_exc_4_io_failure(path, io_error)
    return source.values.astype(np.int64)


def purity_table(report: PurityReport) -> Table:
    table = Table(title=f"identification purity {report.purity:.4f} over {report.n_scored} instances")
    for column in ("entry", "majority label", "served", "matched"):
        table.add_column(column, justify="right")
    for entry in report.entries:
        table.add_row(str(entry.entry_id), str(entry.majority_label), str(entry.served), str(entry.matched))
    return table


def handle(args: argparse.Namespace, console: Console) -> int:
    bundle = read_bundle(args.results)
    if bundle.baseline:
        raise cli_exc_2_invalid_argument("purity needs an evolution pool run, not a baseline run")
    try:
        report = cmd_purity(
            bundle,
            read_labels(args.labels),
            exclude_safe=args.exclude_safe,
            exclude_straddling=args.exclude_straddling,
        )
    except LabelMismatch as mismatch:
        raise cli_exc_2_invalid_argument(f"Labels do not match the run! {mismatch}")
    console.print(purity_table(report))
    if report.n_excluded:
        console.print(f"{report.n_excluded} instances excluded")
    return 0


def register(subparsers, metadata: Dict[str, str]) -> None:
    parser = subparsers.add_parser("purity", help=metadata["help"], description=metadata["description"])
    parser.add_argument("results", help="run output directory or its results.json")
    parser.add_argument("labels", help="labels csv written by `generate`")
    parser.add_argument("--exclude-safe", action="store_true", help="skip the safety period of evolved entries")
    parser.add_argument("--exclude-straddling", action="store_true", help="skip windows that cross a concept boundary")
    parser.set_defaults(handler=handle)

import argparse
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from driftpool.data.loader import write_csv
from driftpool.data.sources import DEFAULT_SPEC_NAME, load_synthetic_spec
from driftpool.data.synthetic import DEFAULT_SEGMENT_LENGTH, LabeledStream, default_spec, generate, segment_bounds
from driftpool.schemas.synthetic import SyntheticSpec
from driftpool.services.messages import cli_exc_2_invalid_synthetic_spec, cli_exc_4_io_failure


def labels_path_for(out: Path) -> Path:
    return out.with_name(f"{out.stem}_labels{out.suffix or '.csv'}")


def build_spec(
    name: str = DEFAULT_SPEC_NAME,
    seed: Optional[int] = None,
    noise_sigma: Optional[float] = None,
    segment_length: Optional[int] = None,
) -> SyntheticSpec:
    try:
        if name == DEFAULT_SPEC_NAME:
            return default_spec(
                seed=0 if seed is None else seed,
                noise_sigma=0.25 if noise_sigma is None else noise_sigma,
                segment_length=DEFAULT_SEGMENT_LENGTH if segment_length is None else segment_length,
            )
        return load_synthetic_spec(name, seed)
    except ValidationError as spec_error:
        raise cli_exc_2_invalid_synthetic_spec(spec_error)
    except (OSError, ValueError) as io_error:
        raise cli_exc_4_io_failure(name, io_error)


def cmd_generate(spec: SyntheticSpec, out: str) -> LabeledStream:
    """write the value series and its concept labels as two csv files."""
    stream = generate(spec)
    values_path = Path(out)
    try:
        write_csv(values_path, {"value": stream.values})
        write_csv(labels_path_for(values_path), {"label": stream.labels})
    except OSError as io_error:
        raise cli_exc_4_io_failure(out, io_error)
    return stream


def segments_table(spec: SyntheticSpec, stream: LabeledStream) -> Table:
    table = Table(title=f"synthetic stream: {stream.values.size} points, seed {spec.seed}")
    for column in ("segment", "concept", "start", "length", "mean", "std"):
        table.add_column(column, justify="right")
    for position, (concept, start, stop) in enumerate(segment_bounds(spec)):
        segment = stream.values[start:stop]
        table.add_row(
            str(position),
            str(concept),
            str(start),
            str(stop - start),
            f"{np.mean(segment):.4f}",
            f"{np.std(segment):.4f}",
        )
    return table


def concepts_table(stream: LabeledStream) -> Table:
    table = Table(title="per concept")
    for column in ("concept", "points", "mean", "std"):
        table.add_column(column, justify="right")
    concepts: List[int] = sorted(int(label) for label in np.unique(stream.labels))
    for concept in concepts:
        values = stream.values[stream.labels == concept]
        table.add_row(str(concept), str(values.size), f"{np.mean(values):.4f}", f"{np.std(values):.4f}")
    return table


def handle(args: argparse.Namespace, console: Console) -> int:
    spec = build_spec(args.spec, seed=args.seed, noise_sigma=args.noise, segment_length=args.segment_length)
    stream = cmd_generate(spec, args.out)
    console.print(segments_table(spec, stream))
    console.print(concepts_table(stream))
    return 0


def register(subparsers, metadata: Dict[str, str]) -> None:
    parser = subparsers.add_parser("generate", help=metadata["help"], description=metadata["description"])
    parser.add_argument("--spec", default=DEFAULT_SPEC_NAME, help="`default` or a synthetic spec JSON file")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--noise", type=float, help="noise sigma of the default spec")
    parser.add_argument("--segment-length", type=int, help="segment length of the default spec")
    parser.add_argument("--out", required=True, help="csv file for the values; labels go next to it")
    parser.set_defaults(handler=handle)

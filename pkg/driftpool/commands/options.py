"""argument builders shared by the run, compare and sweep commands."""
import argparse
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from driftpool.schemas.manifest import RunManifest
from driftpool.services.messages import cli_exc_2_invalid_argument, cli_exc_2_invalid_manifest, cli_exc_4_io_failure
from driftpool.services.validators import ForecasterKind, RetrievalScore, StatsScope

# flag destination -> manifest key
VALUE_FLAGS = {
    "data": "data",
    "column": "column",
    "synthetic": "synthetic",
    "synthetic_seed": "synthetic_seed",
    "normalize": "normalize",
    "lookback": "lookback",
    "horizon": "horizon",
    "forecaster": "forecaster",
    "hidden": "hidden",
    "lr": "lr",
    "epochs": "warmup_epochs",
    "warm_ratio": "warm_ratio",
    "seed": "seed",
    "out": "out",
    "tau_mu": "tau_mu",
    "tau_gene": "tau_gene",
    "tau_l": "tau_l",
    "tau_safe": "tau_safe",
    "tau_e": "tau_e",
    "tau_lr": "tau_lr",
    "t_lr": "t_lr",
    "scope": "scope_s",
    "max_pool": "max_pool_size",
    "score": "retrieval_score",
}

# flag destination -> (manifest key, value when the flag is present)
SWITCH_FLAGS = {
    "no_evolution": ("evolution", "false"),
    "no_elimination": ("elimination", "false"),
    "no_abandonment": ("gradient_abandonment", "false"),
    "no_lr_adjust": ("optimizer_adjustment", "false"),
    "local_only": ("use_global_gene", "false"),
    "global_only": ("use_local_gene", "false"),
    "no_header": ("has_header", "false"),
    "log_forecasts": ("log_forecasts", "true"),
}


def add_manifest_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_argument_group("data source")
    source.add_argument("--data", help="comma-separated file holding the series")
    source.add_argument("--column", help="column name or zero-based index (default: value)")
    source.add_argument("--no-header", action="store_true", help="the file has no header row")
    source.add_argument("--synthetic", help="`default` or a synthetic spec JSON file")
    source.add_argument("--synthetic-seed", type=int, help="seed override for the synthetic spec")
    source.add_argument("--normalize", choices=[scope.value for scope in StatsScope])

    engine = parser.add_argument_group("engine")
    engine.add_argument("--lookback", type=int, help="look-back window length L")
    engine.add_argument("--horizon", type=int, help="forecast horizon H")
    engine.add_argument("--forecaster", choices=[kind.value for kind in ForecasterKind])
    engine.add_argument("--hidden", type=int, help="hidden width of the mlp forecaster")
    engine.add_argument("--lr", type=float, help="raw learning rate")
    engine.add_argument("--epochs", type=int, help="warm-up epochs")
    engine.add_argument("--warm-ratio", type=float, help="share of the series used for warm-up")
    engine.add_argument("--seed", type=int)
    engine.add_argument("--log-forecasts", action="store_true", help="keep every forecast in the results")
    engine.add_argument("--out", help="output directory")

    pool = parser.add_argument_group("evolution pool")
    pool.add_argument("--tau-mu", type=float, help="mean threshold")
    pool.add_argument("--tau-gene", type=float, help="local gene weight of the mixed gene")
    pool.add_argument("--tau-l", type=float, help="local gene EMA ratio")
    pool.add_argument("--tau-safe", type=int, help="safety period in predictions")
    pool.add_argument("--tau-e", type=float, help="elimination threshold")
    pool.add_argument("--tau-lr", type=float, help="learning rate adjustment ratio")
    pool.add_argument("--t-lr", type=int, help="learning rate warming time")
    pool.add_argument("--scope", type=int, help="gene scope S")
    pool.add_argument("--max-pool", type=int, help="FIFO cap on the pool size")
    pool.add_argument("--score", choices=[score.value for score in RetrievalScore])
    pool.add_argument("--no-evolution", action="store_true")
    pool.add_argument("--no-elimination", action="store_true")
    pool.add_argument("--no-abandonment", action="store_true")
    pool.add_argument("--no-lr-adjust", action="store_true")
    genes = pool.add_mutually_exclusive_group()
    genes.add_argument("--local-only", action="store_true")
    genes.add_argument("--global-only", action="store_true")


def collect_overrides(args: argparse.Namespace) -> Dict[str, str]:
    overrides = {}
    for destination, key in VALUE_FLAGS.items():
        value = getattr(args, destination, None)
        if value is not None:
            overrides[key] = str(value)
    for destination, (key, value) in SWITCH_FLAGS.items():
        if getattr(args, destination, False):
            overrides[key] = value
    return overrides


def read_manifest(path: Optional[str], overrides: Optional[Dict[str, str]] = None) -> RunManifest:
    text = ""
    if path:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as io_error:
            raise cli_exc_4_io_failure(path, io_error)
    try:
        return RunManifest.from_text(text, overrides=overrides)
    except ValidationError as validation_error:
        raise cli_exc_2_invalid_manifest(validation_error)
    except ValueError as syntax_error:
        raise cli_exc_2_invalid_argument(f"Invalid manifest `{path}`! {syntax_error}")


def manifest_from_args(args: argparse.Namespace) -> RunManifest:
    return read_manifest(getattr(args, "config", None), collect_overrides(args))

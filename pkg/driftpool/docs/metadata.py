from pathlib import Path

from driftpool.core.config import settings
from driftpool.services.validators import Commands

README_PATH = Path(__file__).with_name("README.md")


def read_cli_metadata():
    description = README_PATH.read_text(encoding="utf-8")

    return {
        "prog": settings.APP_NAME,
        "description": description.split("\n\n", 1)[0].strip(),
        "epilog": f"mode: {settings.MODE}; set DRIFTPOOL_LOG=INFO or DEBUG for engine logs.",
    }


def read_commands_metadata():
    return {
        Commands.run.value: {
            "help": "run the evolution pool (or the bare forecaster) on one manifest",
            "description": "Warm up on the first share of the series, then forecast the rest online "
            "with delayed feedback. Writes results.json, records.csv, trajectories.csv, events.csv "
            "and manifest.txt when --out is given.",
        },
        Commands.compare.value: {
            "help": "compare several manifests on the same data",
            "description": "Runs every manifest and reports mean MSE, evolutions, eliminations and "
            "final pool size, with the percentage change against the first manifest.",
        },
        Commands.sweep.value: {
            "help": "vary one knob over a list of values",
            "description": "Hyperparameter sensitivity: one run per value of --knob, reported like compare.",
        },
        Commands.generate.value: {
            "help": "write a synthetic recurring-concept stream",
            "description": "Writes the value series and a matching `<name>_labels.csv` with the "
            "true concept of every point.",
        },
        Commands.purity.value: {
            "help": "score how cleanly a run separated the concepts",
            "description": "Share of online instances served by an entry whose majority concept "
            "matches the instance's own concept. Every instance is scored unless "
            "`--exclude-safe` or `--exclude-straddling` is given.",
        },
    }

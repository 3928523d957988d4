import argparse
import logging
import sys
from typing import List, Optional

from rich.console import Console
from rich.markup import escape

from driftpool.commands import COMMANDS
from driftpool.core.logging import configure_logging
from driftpool.docs.metadata import read_cli_metadata, read_commands_metadata
from driftpool.services.messages import CommandFailed
from driftpool.services.validators import ExitCode

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(**read_cli_metadata())
    subparsers = parser.add_subparsers(dest="command", required=True)
    metadata = read_commands_metadata()
    for name, command in COMMANDS.items():
        command.register(subparsers, metadata[name])
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits with 2 on bad flags and 0 on --help
        return int(exit_request.code or 0)

    configure_logging()
    console = Console()
    try:
        return args.handler(args, console)
    except CommandFailed as failure:
        Console(stderr=True).print(f"[bold red]error:[/bold red] {escape(failure.detail)}", highlight=False)
        logger.debug("command `%s` failed with exit code %d", args.command, int(failure.exit_code))
        return int(failure.exit_code)
    except KeyboardInterrupt:
        return int(ExitCode.runtime)


if __name__ == "__main__":
    sys.exit(main())

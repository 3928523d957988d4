from typing import Iterable

from pydantic import ValidationError

from driftpool.services.validators import ExitCode


class CommandFailed(Exception):
    """carries the exit code and the message a command ends with."""

    def __init__(self, exit_code: ExitCode, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail

    def __reduce__(self):
        return (type(self), (self.exit_code, self.detail))


def describe_validation_error(error: ValidationError) -> str:
    lines = []
    for issue in error.errors():
        path = ".".join(str(part) for part in issue["loc"])
        lines.append(f"{path}: {issue['msg']}")
    return "; ".join(lines)


def cli_exc_2_invalid_manifest(error: ValidationError) -> CommandFailed:
    return CommandFailed(
        exit_code=ExitCode.validation,
        detail=f"Invalid manifest! {describe_validation_error(error)}",
    )


def cli_exc_2_invalid_synthetic_spec(error: ValidationError) -> CommandFailed:
    return CommandFailed(
        exit_code=ExitCode.validation,
        detail=f"Invalid synthetic spec! {describe_validation_error(error)}",
    )


def cli_exc_2_invalid_argument(message: str) -> CommandFailed:
    return CommandFailed(exit_code=ExitCode.validation, detail=message)


def cli_exc_2_manifest_mismatch(fields: Iterable[str]) -> CommandFailed:
    return CommandFailed(
        exit_code=ExitCode.validation,
        detail=f"Manifests must share data, lookback and horizon! Differing: {', '.join(fields)}",
    )


def cli_exc_3_run_failed(error: Exception) -> CommandFailed:
    return CommandFailed(
        exit_code=ExitCode.runtime,
        detail=f"Run failed! {type(error).__name__}: {error}",
    )


def cli_exc_4_io_failure(path: str, error: Exception) -> CommandFailed:
    return CommandFailed(
        exit_code=ExitCode.io,
        detail=f"Cannot access `{path}`! {error}",
    )

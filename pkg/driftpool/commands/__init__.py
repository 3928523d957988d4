from driftpool.commands import compare, generate, purity, run, sweep
from driftpool.services.validators import Commands

COMMANDS = {
    Commands.run.value: run,
    Commands.compare.value: compare,
    Commands.sweep.value: sweep,
    Commands.generate.value: generate,
    Commands.purity.value: purity,
}

__all__ = ["COMMANDS"]

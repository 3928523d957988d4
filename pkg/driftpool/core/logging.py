import logging
from typing import Union

from rich.console import Console
from rich.logging import RichHandler

from driftpool.core.config import settings

LOG_FORMAT = "%(name)s: %(message)s"


def configure_logging(level: Union[str, int, None] = None) -> logging.Logger:
    """install a single rich handler on the package logger.

    the level defaults to `settings.LOG_LEVEL`, which is read from the
    `DRIFTPOOL_LOG` environment variable.
    """
    if level is None:
        level = settings.LOG_LEVEL
    if isinstance(level, str):
        level = level.upper()

    logger = logging.getLogger("driftpool")
    logger.setLevel(level)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False, markup=False)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.propagate = False
    return logger

import logging

from rich.console import Console
from rich.logging import RichHandler

PACKAGE_LOGGER = "ossermanCliff"


def setup_logging(verbosity: int = 0) -> logging.Logger:
    """
    Attach a rich handler writing to stderr to the package logger.

    Args:
        verbosity (int): 0 → WARNING, 1 → INFO, 2 or more → DEBUG.

    Returns:
        logging.Logger: the configured package logger.
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger

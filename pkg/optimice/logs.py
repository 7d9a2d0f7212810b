"""Logging setup for command-line entry points."""

import logging

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: int | str = logging.INFO) -> None:
    """Attach a single stream handler to the package logger."""
    logger = logging.getLogger('optimice')
    logger.setLevel(level)
    if not any(getattr(h, '_optimice', False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._optimice = True  # type: ignore[attr-defined]
        logger.addHandler(handler)

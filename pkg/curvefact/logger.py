"""Logging to terminal (stderr) and, optionally, to a rotating file"""
import logging
import logging.handlers
import sys

from uvicorn.logging import DefaultFormatter

from curvefact.config import CONFIG

__all__ = ("LOGGER", "CONSOLE_HANDLER", "set_console_level")

# Instantiate LOGGER
LOGGER = logging.getLogger("curvefact")
LOGGER.setLevel(logging.DEBUG)

# Handler; stdout is reserved for reports
CONSOLE_HANDLER = logging.StreamHandler(sys.stderr)
CONSOLE_HANDLER.setLevel(CONFIG.log_level.value.upper())

# Formatter
CONSOLE_FORMATTER = DefaultFormatter("%(levelprefix)s [%(name)s] %(message)s")
CONSOLE_HANDLER.setFormatter(CONSOLE_FORMATTER)

# Add handler to LOGGER
LOGGER.addHandler(CONSOLE_HANDLER)


def set_console_level(level) -> None:
    """Change the level of the console handler, e.g. from the command line verbosity."""
    CONSOLE_HANDLER.setLevel(level)


# Save a file with all messages (DEBUG level)
LOGS_DIR = CONFIG.log_dir
if LOGS_DIR is not None:
    try:
        LOGS_DIR.mkdir(parents=True, exist_ok=True)

        # Handlers
        FILE_HANDLER = logging.handlers.RotatingFileHandler(
            LOGS_DIR.joinpath("curvefact.log"), maxBytes=1000000, backupCount=5
        )

    except OSError:
        LOGGER.warning(
            f"""Log files are not saved.

        The log folder {LOGS_DIR} could not be created or is not writable.
        Set `log_dir` in ~/.curvefact.json to a location you have permission to write to,
        or remove it to disable file logging.
        """
        )
    else:
        FILE_HANDLER.setLevel(logging.DEBUG)

        # Formatter
        FILE_FORMATTER = logging.Formatter(
            "[%(levelname)-8s %(asctime)s %(filename)s:%(lineno)d][%(name)s] %(message)s",
            "%d-%m-%Y %H:%M:%S",
        )
        FILE_HANDLER.setFormatter(FILE_FORMATTER)

        # Add handler to LOGGER
        LOGGER.addHandler(FILE_HANDLER)

"""Utility functions that get information from the system."""
import logging
import os

from invoke import run

from random_circuit_codes import __version__
from random_circuit_codes.errors import ConfigError

logger = logging.getLogger(__name__)

WORKERS_ENV = "RCC_WORKERS"


def get_worker_count() -> int:
    """Number of worker processes from RCC_WORKERS, 1 when unset."""
    value = os.environ.get(WORKERS_ENV, "").strip()
    if not value:
        return 1
    try:
        workers = int(value)
    except ValueError as err:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got {value!r}") from err
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV} must be at least 1, got {workers}")
    return workers


def get_version_string() -> str:
    """`git describe` of the working tree, or the installed version outside a checkout."""
    process = run("git describe --tags --always --dirty", hide=True, warn=True)
    if process is not None and process.ok and process.stdout.strip():
        return process.stdout.strip()
    logger.debug("git describe failed, falling back to the package version")
    return str(__version__)

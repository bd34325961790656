"""
Flat key = value configuration files and environment settings.
"""
import logging
import os
from typing import Dict, List, Mapping, Optional, Tuple

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

THREADS_ENV = "HARVEST_THREADS"
REPEATABLE_KEYS = ("overlay",)


def parse_assignment(text: str) -> Tuple[str, str]:
    """
    Split `key=value` into a stripped pair.

    Raises:
        ConfigurationError: If there is no '=' or the key is empty
    """
    key, sep, value = text.partition("=")
    key, value = key.strip(), value.strip()
    if not sep or not key:
        raise ConfigurationError(f"expected key=value, got {text!r}")
    return key, value


def load_config(path: str) -> Dict[str, List[str]]:
    """
    Read a configuration file.

    Lines are `key = value`; `#` starts a comment and blank lines are
    skipped. Every key maps to the list of its values in file order; only
    keys in REPEATABLE_KEYS may appear more than once.

    Args:
        path: File to read

    Returns:
        Dict[str, List[str]]: Values per key

    Raises:
        ConfigurationError: For unreadable files, malformed lines or repeated keys
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}") from exc

    entries: Dict[str, List[str]] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            key, value = parse_assignment(line)
        except ConfigurationError as exc:
            raise ConfigurationError(f"{path}:{number}: {exc}") from None
        if key in entries and key not in REPEATABLE_KEYS:
            raise ConfigurationError(f"{path}:{number}: key {key!r} given twice")
        entries.setdefault(key, []).append(value)
    logger.debug("loaded %d keys from %s", len(entries), path)
    return entries


def thread_count(environ: Optional[Mapping[str, str]] = None) -> int:
    """
    Row parallelism from HARVEST_THREADS, defaulting to the CPU count.

    Raises:
        ConfigurationError: If the variable is not a positive integer
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigurationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value

"""
Configuration and logging helpers.
"""
from .config import load_config, parse_assignment, thread_count, REPEATABLE_KEYS
from .log import configure_logging

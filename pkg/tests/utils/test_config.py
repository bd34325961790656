"""
Configuration files, environment settings and logging setup.
"""
import logging

import pytest

from entanglement_harvest.errors import ConfigurationError
from entanglement_harvest.utils import configure_logging, load_config, parse_assignment, thread_count


def _write(tmp_path, text):
    path = tmp_path / "sweep.conf"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_load_config_skips_comments_and_keeps_repeats(tmp_path):
    path = _write(tmp_path, "# figure sweep\nscenario = scalar\n\nsigma = 0.2  # width\n"
                            "overlay = L=4,6\noverlay = sigma=0.1\n")
    assert load_config(path) == {
        "scenario": ["scalar"],
        "sigma": ["0.2"],
        "overlay": ["L=4,6", "sigma=0.1"],
    }


def test_repeated_key_is_rejected(tmp_path):
    path = _write(tmp_path, "sigma = 0.2\nsigma = 0.3\n")
    with pytest.raises(ConfigurationError, match=":2:"):
        load_config(path)


def test_malformed_line_and_missing_file(tmp_path):
    with pytest.raises(ConfigurationError, match=":1:"):
        load_config(_write(tmp_path, "sigma 0.2\n"))
    with pytest.raises(ConfigurationError):
        load_config(str(tmp_path / "missing.conf"))


def test_parse_assignment():
    assert parse_assignment(" omega = 4.7 ") == ("omega", "4.7")
    with pytest.raises(ConfigurationError):
        parse_assignment("=4.7")


def test_thread_count():
    assert thread_count({"HARVEST_THREADS": "3"}) == 3
    assert thread_count({}) >= 1
    for raw in ("0", "-2", "four"):
        with pytest.raises(ConfigurationError):
            thread_count({"HARVEST_THREADS": raw})


def test_configure_logging_levels():
    logger = logging.getLogger("entanglement_harvest")
    saved = (list(logger.handlers), logger.level, logger.propagate)
    try:
        configure_logging(1)
        assert logger.level == logging.DEBUG
        configure_logging(-1)
        assert logger.level == logging.WARNING
        configure_logging(0)
        assert logger.level == logging.INFO
        assert len(logger.handlers) == 1
    finally:
        logger.handlers[:] = saved[0]
        logger.setLevel(saved[1])
        logger.propagate = saved[2]

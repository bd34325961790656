"""
Shared pytest configuration: the --audit switch for the brute-force oracle tests.
"""
import pytest


def pytest_addoption(parser):
    parser.addoption("--audit", action="store_true", default=False,
                     help="run the slow momentum-space oracle tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "audit: brute-force oracle test, needs --audit")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--audit"):
        return
    skip = pytest.mark.skip(reason="oracle test; run with --audit")
    for item in items:
        if "audit" in item.keywords:
            item.add_marker(skip)

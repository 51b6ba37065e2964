import sys
from pathlib import Path

import pytest

# Make the top-level packages under src/ importable without installation
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the large-n statistical acceptance tests",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running statistical acceptance runs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)

#!/usr/bin/env python3
"""
Pytest configuration for netlob
"""

import sys
from pathlib import Path

import pytest

# Add parent directory to path so the tests run without an install
sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent))

from netlob.contracts import RunConfig  # noqa: E402
from netlob.harness import run_scenario  # noqa: E402

SMALL_RUN = dict(
    scenario="small",
    network="er",
    n_agents=30,
    n_edges=60,
    q=0.1,
    horizon=200_000.0,
    burn_in=20_000.0,
    realizations=2,
    base_seed=11,
    acf_max_lag=20,
    sign_max_lag=20,
    sign_fit_hi=10,
    abs_fit_hi=10,
    return_bins=21,
)


def pytest_addoption(parser):
    """Add custom pytest options"""
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run full-scale scenario tests",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def small_run_config(tmp_path):
    """A few dozen agents on an ER graph; seconds per realization."""
    return RunConfig(**SMALL_RUN, output_dir=str(tmp_path / "results"))


@pytest.fixture(scope="module")
def small_scenario(tmp_path_factory):
    """One finished run of the small scenario, shared by a test module."""
    out = tmp_path_factory.mktemp("results")
    return run_scenario(RunConfig(**SMALL_RUN, output_dir=str(out)))


@pytest.fixture
def presets_dir():
    return Path(__file__).parent.parent / "presets"

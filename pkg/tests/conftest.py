"""Pytest configuration file."""

import os
import sys
from pathlib import Path

import numpy as np
import pytest
from dotenv import load_dotenv

# Add the parent directory and src directory to Python path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))
sys.path.insert(0, str(project_root))

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / ".env"
if env_path.exists():
    load_dotenv(env_path)

from matilda_detour.config import EngineConfig, MutationConfig, SimConfig  # noqa: E402
from matilda_detour.scenario import load_corpus_seed  # noqa: E402
from matilda_detour.simulator import get_planner, simulate  # noqa: E402
from tests.utils import straight_scenario, two_lane_map  # noqa: E402

SLOW_MARKERS = ("slow", "benchmark")


def pytest_collection_modifyitems(config, items):
    """Deselect the long statistical runs.

    Set DETOUR_RUN_SLOW=1 to include tests marked slow or benchmark.
    """
    if os.getenv("DETOUR_RUN_SLOW") == "1":
        return

    deselected = []
    kept = []
    for item in items:
        if any(item.get_closest_marker(name) is not None for name in SLOW_MARKERS):
            deselected.append(item)
        else:
            kept.append(item)

    if deselected:
        config.hook.pytest_deselected(items=deselected)
        items[:] = kept


@pytest.fixture(autouse=True)
def isolated_config(tmp_path_factory, monkeypatch):
    """Keep the user's ~/.matilda/config.toml and DETOUR_* variables out of every test."""
    missing = tmp_path_factory.mktemp("config") / "absent.toml"
    monkeypatch.setenv("MATILDA_CONFIG", str(missing))
    for key in ("DETOUR_JOBS", "DETOUR_RNG_SEED", "DETOUR_DEBUG", "DETOUR_JSON_MODE"):
        monkeypatch.delenv(key, raising=False)
    return missing


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def corpus():
    """Bundled seeds by id, loaded once per session."""
    cache = {}

    def load(seed_id):
        if seed_id not in cache:
            cache[seed_id] = load_corpus_seed(seed_id)
        return cache[seed_id]

    return load


@pytest.fixture(scope="session")
def road():
    return two_lane_map()


@pytest.fixture
def empty_seed():
    return straight_scenario()


@pytest.fixture
def planner():
    return get_planner("default")


@pytest.fixture(scope="session")
def empty_seed_run(road):
    """Observation and outcome of the empty two-lane seed under the default planner."""
    return simulate(straight_scenario(), road, get_planner("default"), SimConfig())


@pytest.fixture
def fast_engine():
    """A campaign config small enough for integration tests."""
    return EngineConfig(
        population_n=2,
        budget={"iterations": 2},
        mutation=MutationConfig(delta_t=2.0, max_added=3),
    )

"""
Shared fixtures for the drgq test suite.
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add repo root to path for imports
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.drg.intersection_array import IntersectionArray
from src.utils.config import get_config, reset_config
from src.utils.data import CatalogLoader
from src.utils.logging import reset_logger

JOHNSON_6_3 = "9,4,1;1,4,9"
ICOSAHEDRON = "5,2,1;1,2,5"
CUBE = "3,2,1;1,2,3"
PETERSEN = "3,2;1,1"


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Fresh config and logger per test, with logs under tmp_path and no env overrides."""
    for var in ("DRGQ_ORDER_LIMIT", "DRGQ_WORKERS", "DRGQ_CONFIG"):
        monkeypatch.delenv(var, raising=False)
    reset_config()
    reset_logger()
    config = get_config()
    config.set("logging.output_dir", str(tmp_path / "logs"))
    yield config
    reset_config()
    reset_logger()


@pytest.fixture
def q_grid(isolated_config):
    return [Fraction(q) for q in isolated_config.get("grids.q_test_grid")]


@pytest.fixture
def catalog():
    return CatalogLoader("data/catalog.yaml").load()


@pytest.fixture
def johnson_array():
    return IntersectionArray.parse(JOHNSON_6_3)


@pytest.fixture
def icosahedron_array():
    return IntersectionArray.parse(ICOSAHEDRON)


@pytest.fixture
def cube_array():
    return IntersectionArray.parse(CUBE)


@pytest.fixture
def petersen_array():
    return IntersectionArray.parse(PETERSEN)

"""
Pytest configuration and shared fixtures for permstats tests
"""

import pytest

from services.perm_core import Permutation
from utils.config import get_config


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """Fresh settings per test, read from a clean PERMSTATS_ environment"""
    for key in ("EXHAUSTIVE_DEGREE_CAP", "SLOW_DEGREE_CAP", "AVOIDER_DEGREE_CAP", "WORKERS",
                "REPORT_DIR", "LOG_LEVEL", "LOG_FORMAT"):
        monkeypatch.delenv(f"PERMSTATS_{key}", raising=False)
    monkeypatch.setenv("PERMSTATS_ENVIRONMENT", "test")
    get_config.cache_clear()
    yield
    get_config.cache_clear()


@pytest.fixture
def golden_v():
    """The worked seven-letter example of the extended bijection"""
    return Permutation((6, 4, 3, 7, 5, 2, 1))


@pytest.fixture
def golden_psi_v():
    return Permutation((4, 6, 7, 3, 2, 1, 5))

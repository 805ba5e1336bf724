from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from gmtilde.groebner import clear_cache

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "src" / "gmtilde" / "corpus"
INVALID = ROOT / "tests" / "data" / "invalid"


@pytest.fixture
def corpus_dir():
    return CORPUS


@pytest.fixture
def invalid_dir():
    return INVALID


@pytest.fixture(autouse=True)
def _fresh_gb_cache():
    clear_cache()
    yield

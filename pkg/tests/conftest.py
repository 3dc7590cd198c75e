"""
Pytest fixtures and configuration.
"""

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

settings.register_profile(
    "grpwild",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "grpwild"))


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings (no pinned CLI flags, no env)."""
    from config import reset_settings

    for key in list(os.environ):
        if key.startswith("GRPWILD_"):
            monkeypatch.delenv(key)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def c2():
    from catalog import catalog_group

    return catalog_group("C2")


@pytest.fixture
def c3():
    from catalog import catalog_group

    return catalog_group("C3")


@pytest.fixture
def s3():
    from catalog import catalog_group

    return catalog_group("S3")


@pytest.fixture
def s4():
    from catalog import catalog_group

    return catalog_group("S4")


@pytest.fixture
def a5():
    from catalog import catalog_group

    return catalog_group("A5")


@pytest.fixture
def s5():
    from catalog import catalog_group

    return catalog_group("S5")


@pytest.fixture
def klein():
    from catalog import catalog_group

    return catalog_group("C2 x C2")


@pytest.fixture
def g2_c2(c2):
    """G_2(C2): order 16, elementary abelian."""
    from semidirect import build_Gp

    return build_Gp(c2, 2)


@pytest.fixture
def g2_c3(c3):
    """G_2(C3): order 48."""
    from semidirect import build_Gp

    return build_Gp(c3, 2)


@pytest.fixture
def g3_c3(c3):
    """G_3(C3): order 3^11."""
    from semidirect import build_Gp

    return build_Gp(c3, 3)


@pytest.fixture
def tmp_cache(tmp_path):
    from cache import ResultCache

    return ResultCache(tmp_path / "cache")

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def z8():
    from zdgenus import catalog_ring

    return catalog_ring("Z_8")


@pytest.fixture(scope="session")
def z12():
    from zdgenus import catalog_ring

    return catalog_ring("Z_12")

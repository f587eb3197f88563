import pytest
from hypothesis import HealthCheck, settings

from isotopelab import Field

settings.register_profile(
    "exact",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def rationals():
    return Field.rationals()


@pytest.fixture(scope="session")
def f3():
    return Field.gf(3)


@pytest.fixture(scope="session")
def f5():
    return Field.gf(5)


@pytest.fixture(scope="session")
def f7():
    return Field.gf(7)

import pytest
from hypothesis import HealthCheck, settings

from cubic_hilbert import classifier

# deterministic property tests: same examples every run, no deadline noise
settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def omega_reports():
    """Every family report with 10 <= d <= 30 and g >= 3d - 18."""
    return list(classifier.sweep(10, 30, omega_only=True))

import pytest
from hypothesis import HealthCheck, settings

from qbethe.params import ModelParams, parameter_grid

settings.register_profile(
    "default",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

REFERENCE = ModelParams(0.5, 0.3, -0.2, 0.4, -0.1)


@pytest.fixture
def ref_params():
    return REFERENCE


@pytest.fixture(scope="session")
def grid():
    return parameter_grid(8, seed=11)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

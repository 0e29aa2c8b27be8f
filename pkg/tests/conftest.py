import pytest
from hypothesis import HealthCheck, settings

import cases

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def overlap():
    return cases.three_seat_overlap()


@pytest.fixture
def kernel_election():
    return cases.kernel_election()


@pytest.fixture
def first_kernel_split(kernel_election):
    return cases.distribution(kernel_election, cases.KERNEL_TARGET, cases.FIRST_KERNEL_SPLIT)


@pytest.fixture
def second_kernel_split(kernel_election):
    return cases.distribution(kernel_election, cases.KERNEL_TARGET, cases.SECOND_KERNEL_SPLIT)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

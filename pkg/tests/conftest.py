from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from orbidt.laurent import RationalPoint

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def pt():
    return RationalPoint(Fraction(2), Fraction(3), Fraction(5, 7))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)

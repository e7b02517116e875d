import numpy as np
import pytest

from proxframe import build_frame

ACCEPTANCE_LINES = []


@pytest.fixture
def toy():
    """The frame (1, 2)^T with gamma = 5/3."""
    return build_frame([[1.0], [2.0]]), 5.0 / 3.0


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

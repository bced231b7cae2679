import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rfcodes.codes import parse_code  # noqa: E402

FOUR_NEURON = "e,1,2,3,4,12,13,23,24,123"
NESTED = "e,1,2,3,12,123"
PAIRS5 = "e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45"


@pytest.fixture
def four_neuron():
    return parse_code(FOUR_NEURON)


@pytest.fixture
def nested():
    return parse_code(NESTED)


@pytest.fixture
def pairs5():
    return parse_code(PAIRS5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

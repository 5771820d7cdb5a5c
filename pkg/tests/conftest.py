import random

import pytest
from hypothesis import HealthCheck, settings

from tanglekh.construct import random_diagram, random_simple_tangle
from tanglekh.diagram import parse_diagram
from tanglekh.tables import load_fixture

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ONE_ONE_TEXT = "B p q r s\nX+ p s r q\n"


@pytest.fixture
def one_one():
    """Two arcs crossing once, right-handed."""
    return parse_diagram(ONE_ONE_TEXT)


@pytest.fixture
def trefoil():
    """Left-handed trefoil, all-zero state has two circles."""
    return load_fixture("31_mmm.tangle")


@pytest.fixture
def fixture():
    return load_fixture


def diagrams_from_seed(seed, max_crossings=5):
    return random_diagram(random.Random(seed), max_crossings=max_crossings)


def simple_from_seed(seed, max_arcs=5):
    return random_simple_tangle(random.Random(seed), max_arcs=max_arcs)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import numpy as np
import pytest
from hypothesis import settings

from boolsyn.network import constant_network, identity_network, random_network, shift_network, transition_map

settings.register_profile("ci", max_examples=50, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def identity():
    return identity_network()


@pytest.fixture(scope="session")
def constant():
    return constant_network(0)


@pytest.fixture(scope="session")
def shift():
    return shift_network()


@pytest.fixture(scope="session")
def random_nets():
    """100 seeded random 12-node networks, shared across modules."""
    return [random_network(np.random.default_rng([2024, i])) for i in range(100)]


@pytest.fixture(scope="session")
def random_maps(random_nets):
    return [transition_map(net) for net in random_nets]


_CRITERIA: dict[int, str] = {}


@pytest.fixture(scope="session")
def criteria():
    """Acceptance verdicts, printed one line per criterion at the end of the run."""
    return _CRITERIA


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[number])

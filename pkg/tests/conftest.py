import sys

import pytest
from hypothesis import HealthCheck, settings

from kanext import Functor, chain_category, discrete_category, set_functor

settings.register_profile("desk", max_examples=60, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("desk")


@pytest.fixture
def chain3():
    return chain_category(3)


@pytest.fixture
def ends_inclusion(chain3):
    """Discrete {0, 2} inside the chain 0 < 1 < 2, with X(0) = {u}, X(2) = {u, v}."""
    A = discrete_category(["0", "2"])
    K = Functor(A, chain3, {"0": "0", "2": "2"}, {"id_0": "id_0", "id_2": "id_2"})
    X = set_functor(A, {"0": ["u"], "2": ["u", "v"]})
    return K, X


def pytest_terminal_summary(terminalreporter):
    mods = [m for name, m in sys.modules.items() if name.endswith("test_acceptance")]
    lines = getattr(mods[0], "LINES", []) if mods else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

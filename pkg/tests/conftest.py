import pytest
from hypothesis import settings, HealthCheck

from heckecenter.groupdata import load_group
from heckecenter.trace import dual_basis, gram

# Property suites are reproducible: fixed example stream, 100 cases each.
settings.register_profile("repro", max_examples=100, derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")


@pytest.fixture(scope="session")
def a2():
    return load_group("a2")


@pytest.fixture(scope="session")
def g4():
    return load_group("g4")


@pytest.fixture(scope="session")
def g4_gram(g4):
    return gram(g4)


@pytest.fixture(scope="session")
def g4_duals(g4, g4_gram):
    return dual_basis(g4, g4_gram)


@pytest.fixture(scope="session")
def a2_duals(a2):
    return dual_basis(a2)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

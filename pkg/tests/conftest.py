"""Shared fixtures: cached group/lattice construction and the acceptance
summary printed at the end of the run."""

import pytest

from groupdom.corpus import get_gamma, get_group, get_lattice

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def group():
    return get_group


@pytest.fixture(scope="session")
def lattice():
    return get_lattice


@pytest.fixture(scope="session")
def gamma_of():
    return get_gamma


@pytest.fixture
def acceptance_record():
    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS.append((number, title, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        line = f"ACCEPTANCE {number} [{title}]: {status}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)

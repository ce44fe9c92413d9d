"""Shared fixtures plus the acceptance summary printed at the end of a run."""

import pytest

from rii import cauchy_scheme

_CRITERIA = []


def record_criterion(number, label, passed, detail=""):
    """Collect one acceptance verdict; the terminal summary prints them all."""
    _CRITERIA.append((number, label, bool(passed), detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, passed, detail in sorted(_CRITERIA):
        line = "criterion %2d  %-46s %s" % (number, label,
                                            "PASS" if passed else "FAIL")
        if detail:
            line += "  [%s]" % detail
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def cauchy():
    """The worked scheme: rho = 1, c = 0, lambda = 1/4, W = x^2 + 1."""
    return cauchy_scheme()

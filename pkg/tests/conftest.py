"""Shared fixtures: cached group construction and an acceptance summary."""

import pytest

from chevalley import ChevalleyGroup, make_ring

_GROUPS = {}


def group(system, ringdesc):
    """ChevalleyGroup cached by (system, ring descriptor)."""
    key = (system, ringdesc)
    if key not in _GROUPS:
        _GROUPS[key] = ChevalleyGroup(system, make_ring(ringdesc))
    return _GROUPS[key]


@pytest.fixture
def make_group():
    return group


# one pass/fail line per acceptance criterion, printed after the run
_ACCEPTANCE = {}


def record_criterion(number, label):
    _ACCEPTANCE[number] = [label, 'FAIL']


def pytest_runtest_logreport(report):
    if report.when != 'call' or 'test_acceptance.py' not in report.nodeid:
        return
    name = report.nodeid.split('::')[-1]
    for number, entry in _ACCEPTANCE.items():
        if ('criterion_%d_' % number) in name:
            entry[1] = {'passed': 'PASS', 'failed': 'FAIL'}.get(
                report.outcome, report.outcome.upper())


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep('-', 'acceptance criteria')
    for number in sorted(_ACCEPTANCE):
        label, outcome = _ACCEPTANCE[number]
        terminalreporter.write_line('criterion %d (%s): %s' % (number, label, outcome))

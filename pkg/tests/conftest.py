import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_ACCEPTANCE: dict[int, dict] = {}
_FINDINGS: list[str] = []
_OUTCOMES: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): one acceptance criterion")
    config.addinivalue_line("markers", "after_suites: run after every other collected test")


def pytest_collection_modifyitems(session, config, items):
    late = [it for it in items if it.get_closest_marker("after_suites")]
    items[:] = [it for it in items if not it.get_closest_marker("after_suites")] + late


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _OUTCOMES[item.nodeid] = rep.outcome
        mark = item.get_closest_marker("acceptance")
        if mark:
            number, title = mark.args
            _ACCEPTANCE[number] = {"title": title, "passed": rep.passed, "seconds": rep.duration}


@pytest.fixture
def finding():
    """Record a note for the end-of-run summary."""
    return _FINDINGS.append


@pytest.fixture
def outcomes():
    """Outcomes so far, keyed by node id."""
    return _OUTCOMES


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE and not _FINDINGS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        a = _ACCEPTANCE[number]
        status = "PASS" if a["passed"] else "FAIL"
        tr.write_line(f"{status} criterion {number}: {a['title']} ({a['seconds']:.1f} s)")
    if _FINDINGS:
        tr.section("findings")
        for f in _FINDINGS:
            tr.write_line(f"- {f}")

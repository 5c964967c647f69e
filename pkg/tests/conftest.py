import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _criteria.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    # one line per criterion; a criterion split over several tests fails if any part does
    merged: dict[int, tuple[str, bool]] = {}
    for number, title, outcome in _criteria:
        _, ok = merged.get(number, (title, True))
        merged[number] = (title, ok and outcome == "passed")
    terminalreporter.section("acceptance criteria")
    for number, (title, ok) in sorted(merged.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


@pytest.fixture
def rng(request):
    return random.Random(request.node.name)

import warnings

import pytest

from beerkoszul.reflgroups import ReducibleGroupWarning

CRITERIA: dict = {}


@pytest.fixture
def criterion(request):
    """Record PASS/FAIL for an acceptance criterion under the given number."""

    def mark(number: int):
        CRITERIA.setdefault(number, [])
        CRITERIA[number].append(request.node)

    return mark


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.criterion_outcome = rep.outcome


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        nodes = CRITERIA[number]
        failed = [n.name for n in nodes if getattr(n, "criterion_outcome", "failed") != "passed"]
        if failed:
            line = f"FAIL  ({len(failed)} of {len(nodes)}: {', '.join(failed)})"
        else:
            line = f"PASS  ({len(nodes)} tests)"
        terminalreporter.write_line(f"criterion {number:2d}: {line}")


@pytest.fixture(autouse=True)
def _quiet_reducible():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReducibleGroupWarning)
        yield

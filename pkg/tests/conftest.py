import pytest
from hypothesis import settings

# exact arithmetic on huge integers makes single examples slow
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_criteria: dict[int, str] = {}
_owner: dict[str, int] = {}
_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            num, title = m.args
            _criteria[num] = title
            _owner[item.nodeid] = num


def pytest_runtest_logreport(report):
    num = _owner.get(report.nodeid)
    if num is None:
        return
    if report.when == "call" or report.failed:
        _outcomes.setdefault(num, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        results = _outcomes.get(num)
        if not results:
            verdict = "NOT RUN"
        else:
            verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {_criteria[num]}")

import pytest

from colorstego.samples import SHORT_COVER, SHORT_SECRET

# nodeid -> (criterion number, title), filled at collection time
_criteria = {}
_results = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _criteria[item.nodeid] = m.args


def pytest_runtest_logreport(report):
    marker = _criteria.get(report.nodeid)
    if marker is None:
        return
    if report.when == "call" or report.failed:
        number = marker[0]
        _results[number] = _results.get(number, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    titles = dict(_criteria.values())
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        status = "PASS" if _results[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {titles[number]}")


@pytest.fixture
def short_pair():
    return SHORT_COVER, SHORT_SECRET

import pytest

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    key = marker.args[0]
    ok = report.passed if report.when == "call" else False
    title = marker.args[1] if len(marker.args) > 1 else item.name
    prev = _CRITERIA.get(key)
    _CRITERIA[key] = (title, ok and (prev is None or prev[1]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=str):
        title, ok = _CRITERIA[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}")

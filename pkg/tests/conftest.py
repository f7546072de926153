import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def note(request):
    """Attach a short result note to the acceptance line of this test."""
    def add(text):
        request.node.user_properties.append(("note", text))
    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and report.passed):
        return
    number, title = mark.args
    notes = [v for k, v in item.user_properties if k == "note"]
    prev = _RESULTS.get(number)
    ok = report.passed and (prev is None or prev[0])
    _RESULTS[number] = (ok, title, (prev[2] if prev else []) + notes)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, title, notes = _RESULTS[number]
        extra = f" ({'; '.join(notes)})" if notes else ""
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}{extra}")

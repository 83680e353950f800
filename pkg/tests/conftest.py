import pytest

from fuzzyrough import fixtures

# criterion number -> (title, passed); filled by tests marked with @pytest.mark.criterion
_CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when == "teardown":
        return
    number, title = mark.args
    if rep.when == "setup" and rep.passed:
        return
    prev = _CRITERIA.get(number, (title, True))[1]
    _CRITERIA[number] = (title, prev and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def three_point():
    return fixtures.three_point()


@pytest.fixture
def coarse():
    return fixtures.three_point_coarse()


@pytest.fixture
def ref6():
    return fixtures.reference_6()

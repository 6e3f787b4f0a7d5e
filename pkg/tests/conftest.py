import pytest

from tonal.permutation import sigma
from tonal.verify import run_all


@pytest.fixture(scope="session")
def sig():
    return sigma()


@pytest.fixture(scope="session")
def verify_results():
    return run_all()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    results = item.config._criteria
    passed = results.get(number, (title, True))[1]
    if rep.when == "call" or rep.failed:
        results[number] = (title, passed and not rep.failed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {title}")

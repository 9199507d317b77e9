import pytest
from hypothesis import HealthCheck, settings

# deterministic runs: the same examples every time
settings.register_profile("default", derandomize=True, deadline=None, max_examples=150,
                          database=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance criterion id -> [title, failed reports, seconds]
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion checked by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    entry = _criteria.setdefault(marker[0], [marker[1], 0, 0.0])
    entry[1] += report.failed
    # a test may report the time of the work it checks, e.g. a shared fixture
    timed = dict(report.user_properties).get("seconds")
    if report.when == "call":
        entry[2] += report.duration if timed is None else timed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=lambda c: tuple(int(p) for p in c.split("."))):
        title, failures, seconds = _criteria[cid]
        verdict = "FAIL" if failures else "PASS"
        terminalreporter.write_line(f"{verdict} {cid} {title} [{seconds:.2f} s]")

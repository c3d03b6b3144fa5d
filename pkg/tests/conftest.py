import random

import pytest
from hypothesis import settings

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=150)
settings.load_profile("repo")

_results: dict[int, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240601, help="seed for randomized tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        ok = rep.passed and _results.get(n, ("PASS",))[0] == "PASS"
        _results[n] = ("PASS" if ok else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, title = _results[n]
        terminalreporter.write_line(f"{status} criterion {n}: {title}")


@pytest.fixture(scope="session")
def oracle20():
    from doubletile.tiler import oracle_enumerate
    return oracle_enumerate(20)


@pytest.fixture(scope="session")
def generated20():
    from doubletile.tiler import generate_census
    return generate_census(20)

import random
import sys

import pytest

from gpgswitch.graphs import build_petersen

DEFAULT_SEED = 20240611


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for the randomized property tests")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture(scope="session")
def p3():
    return build_petersen(3, 1)


@pytest.fixture(scope="session")
def p5():
    return build_petersen(5, 1)


@pytest.fixture(scope="session")
def p7():
    return build_petersen(7, 1)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        passed, line = RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number}: {line}")

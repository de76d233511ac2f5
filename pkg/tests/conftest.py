import sys

import pytest

from liedual import catalog
from liedual.lie import LieAlgebra


@pytest.fixture
def r2():
    return catalog.lookup("r2").algebra


@pytest.fixture
def sl2():
    return catalog.lookup("sl2").algebra


@pytest.fixture
def heis3():
    return catalog.lookup("heis3").algebra


def r3(mu):
    return catalog.lookup("r3(%d)" % mu).algebra


def abelian(n):
    return LieAlgebra.abelian(n)


ALL_NAMES = catalog.names()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)

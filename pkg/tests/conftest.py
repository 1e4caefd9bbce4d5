import functools

import pytest

from noncrossing.coxeter import CoxeterSpec
from noncrossing.lattice import build_nc

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def lattice(family: str, degree: int):
    spec = CoxeterSpec.A(degree) if family == "A" else CoxeterSpec.B(degree)
    return build_nc(spec)


@pytest.fixture
def nc():
    return lattice


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

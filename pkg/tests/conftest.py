import pytest

from rbalg import QQ
from rbalg.catalog import build
from rbalg.linalg import Subspace
from rbalg.rota_baxter import from_splitting


def span(a, idx):
    return Subspace.span([a.basis(i) for i in idx], a.dim, a.field)


@pytest.fixture(scope="session")
def sl2():
    return build("sl:2", QQ)


@pytest.fixture(scope="session")
def m2():
    return build("Mn:2", QQ)


@pytest.fixture(scope="session")
def sl2_split(sl2):
    # span{e, h} + span{f}
    return from_splitting(sl2, span(sl2, [0, 1]), span(sl2, [2]))


@pytest.fixture(scope="session")
def m2_split(m2):
    # upper triangular + span{e21}; basis e11, e12, e21, e22
    return from_splitting(m2, span(m2, [0, 1, 3]), span(m2, [2]))


ACCEPTANCE_LINES = {}


def record_criterion(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])

import pytest

from possdlp import golden
from possdlp.lattice import decimal_chain, modality_lattice

# outcome lines for tests/test_acceptance.py, printed after the run
_ACCEPTANCE = {}


@pytest.fixture
def mod():
    return modality_lattice()


@pytest.fixture
def unit():
    """0 < 0.1 < ... < 1."""
    return decimal_chain("0", "1", "0.1")


@pytest.fixture
def g():
    return golden.load


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_ac"):
        _ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n[7:9])):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]}  {name}")

import pytest

from supertableaux.hookshapes import Signature, validate_shape
from supertableaux.tableaux import HookTableau

SL12 = Signature(1, 2)
SL21 = Signature(2, 1)
SL22 = Signature(2, 2)
SL23 = Signature(2, 3)


def shape(m, n, a, a_prime=()):
    return validate_shape(Signature(m, n), a, a_prime)


def tableau(m, n, a, a_prime, plus, minus=()):
    return HookTableau(shape(m, n, a, a_prime), plus, minus)


@pytest.fixture
def sl23_example():
    """sl(2,3) tableau of shape ((1,3),(2,3)) containing the pair ((1,1),(1,1))."""
    return tableau(2, 3, (1, 3), (2, 3), ((1, 1, 2, 2), (2, 3, 4)), ((3, 3, 4, 4, 5), (4, 5, 5)))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

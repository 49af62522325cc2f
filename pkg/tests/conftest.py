import pytest

from shilab import build

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


@pytest.fixture(params=SMALL_TYPES)
def small_rs(request):
    return build(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)

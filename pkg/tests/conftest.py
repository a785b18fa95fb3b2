import pytest

from aerolink.presets import reference_spec
from aerolink.scenario import run_sweep

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def reference_series():
    return run_sweep(reference_spec())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

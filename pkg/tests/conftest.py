import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from langtrotter import genus2, ltlab  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fixed_records():
    """label -> Frobenius records for every good p <= 10^4 on the fixed curves."""
    return {c.label: genus2.frobenius_records(c, 10**4) for c in genus2.FIXED_CURVES}


@pytest.fixture(scope="session")
def lt_records():
    """x^5+x+1 to 10^5 with quartics wherever a_p is in {0, +-1, +-2}."""
    curve = genus2.FIXED_CURVES[0]
    return ltlab.curve_records(curve, 10**5, a_values={0, 1, -1, 2, -2})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

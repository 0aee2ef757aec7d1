import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mapsym.families import witness_corpus  # noqa: E402

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def corpus():
    """Flat list of (name, map) over every genus of the witness corpus."""
    return [item for g, items in sorted(witness_corpus(3).items()) for item in items]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])

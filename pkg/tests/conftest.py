import json
import sys
from pathlib import Path

import pytest

from equivol import solids
from equivol.census import load_faces_json

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
sys.path.insert(0, str(HERE))


def load_fixture(name: str):
    return load_faces_json((FIXTURES / f"{name}.json").read_text())


@pytest.fixture(scope="session")
def golden():
    return json.loads((FIXTURES / "andreev_golden.json").read_text())


@pytest.fixture(scope="session")
def platonic():
    return {name: make() for name, make in solids.PLATONIC.items()}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

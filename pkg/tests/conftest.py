from __future__ import annotations

import json
from pathlib import Path

import pytest

from symroute.gateway import ReplayClient
from symroute.harness import problem_from_json

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
CORPUS = FIXTURES / "data" / "corpus.jsonl"


@pytest.fixture(scope="session")
def replay() -> ReplayClient:
    return ReplayClient.load(FIXTURES)


@pytest.fixture
def tiger():
    return problem_from_json(json.loads((FIXTURES / "tiger.json").read_text()))


# acceptance criteria report one line each; the summary repeats them after the run
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])

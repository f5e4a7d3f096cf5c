from pathlib import Path

import pytest

from horrocks.symbolic.monad import MonadPresentation

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "horrocks" / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def monad1() -> MonadPresentation:
    return MonadPresentation.load(FIXTURES / "prop3_monad_1.json")


@pytest.fixture(scope="session")
def monad2() -> MonadPresentation:
    return MonadPresentation.load(FIXTURES / "prop3_monad_2.json")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

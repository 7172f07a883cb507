import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rainbowpaths import generators as gen  # noqa: E402

ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def record():
    """Record one acceptance line; call with (criterion, passed, detail)."""

    def _record(name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[name] = f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[name])


@pytest.fixture(scope="session")
def myc23():
    return gen.mycielski_iterate(gen.cycle(5), 2)


@pytest.fixture(scope="session")
def grotzsch():
    return gen.grotzsch()

from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

MASS_PAIRS = [(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), 2)]


@pytest.fixture(params=MASS_PAIRS, ids=lambda p: f"M={p[0]},N={p[1]}")
def masses(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(num: int, ok: bool, detail: str) -> bool:
        line = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

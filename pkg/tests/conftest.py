import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)

_ACCEPTANCE: list[str] = []


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(label: str, ok: bool, note: str = ""):
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}{('  ' + note) if note else ''}")
        return ok
    return record


def rand_rational(rng, num=30, den=9):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)

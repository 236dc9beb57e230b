import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from polgame.games import random_game
from polgame.generators import random_formula
from polgame.syntax import OPP, PLY

settings.register_profile(
    "polgame", deadline=None, max_examples=120,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("polgame")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
polarities = st.sampled_from([OPP, PLY])


@st.composite
def games(draw, pol=None, max_depth=4, max_branch=3):
    """Random game trees, built from a drawn seed so failures are reproducible."""
    p = pol if pol is not None else draw(polarities)
    depth = draw(st.integers(0, max_depth))
    return random_game(depth, max_branch, p, draw(seeds))


@st.composite
def formulas(draw, pol=None, max_depth=4, exponentials=True, multiplicative_only=False):
    p = pol if pol is not None else draw(polarities)
    depth = draw(st.integers(0, max_depth))
    return random_formula(draw(seeds), p, depth=depth, exponentials=exponentials,
                          multiplicative_only=multiplicative_only)


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line for an acceptance criterion, then enforce it."""
    def report(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

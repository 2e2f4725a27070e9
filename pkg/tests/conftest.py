import math

import pytest

from saddle_walk import AnthroProfile, GaitRequest, plan_walk

MEAN_HEIGHT = 1.79
MEAN_MASS = 63.3
GRID_SPEEDS = (0.7, 1.0, 1.2, 1.6)
GRID_ANGLES = (5.0, 10.0, 15.0)

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def profile():
    return AnthroProfile.from_height(MEAN_HEIGHT, MEAN_MASS)


@pytest.fixture(scope="session")
def walk_v1():
    """Two-step walk at 1 m/s and a 10 deg heel strike."""
    return plan_walk(GaitRequest(1.0, math.radians(10.0), 2, MEAN_HEIGHT, MEAN_MASS))


@pytest.fixture(scope="session")
def grid_logs():
    """Ten-stride plans for every grid cell, keyed by (speed, angle)."""
    out = {}
    for v in GRID_SPEEDS:
        for a in GRID_ANGLES:
            req = GaitRequest(v, math.radians(a), 20, MEAN_HEIGHT, MEAN_MASS)
            out[(v, a)] = plan_walk(req)
    return out


@pytest.fixture
def acceptance_line():
    def record(number: int, ok: bool, text: str):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {text}")
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from planedom import generators as gens
from planedom.planegraph import PlaneGraph

from .support import ACCEPTANCE_LINES

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_triangulations() -> list[PlaneGraph]:
    return [g for n in range(3, 10) for g in ([gens.triangle()] if n == 3 else gens.all_triangulations(n))]


@pytest.fixture(scope="session")
def small_plane_graphs() -> list[PlaneGraph]:
    return [g for n in range(3, 7) for g in gens.all_simple_plane(n)]

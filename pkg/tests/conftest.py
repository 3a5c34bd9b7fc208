import numpy as np
import pytest

from acoci.core import Bounds, Problem, SolverConfig


def quadratic_problem(center, lower, upper, name="quad"):
    center = np.asarray(center, dtype=float)
    return Problem(
        name=name,
        dimension=center.size,
        objective=lambda x: float(np.sum((np.asarray(x) - center) ** 2)),
        bounds=Bounds(np.asarray(lower, dtype=float), np.asarray(upper, dtype=float)),
    )


@pytest.fixture
def shifted_parabola():
    """(x - 3)^2 on [0, 10]."""
    return quadratic_problem([3.0], [0.0], [10.0], name="parabola")


@pytest.fixture
def config():
    return SolverConfig()


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert it."""

    def check(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import numpy as np
import pytest

from oracles import grid_minimum, quadratic_vec


def test_grid_recovers_interior_minimum():
    value, at = grid_minimum(quadratic_vec([0.25]), [0.0], [1.0], points=1001)
    assert value == pytest.approx(0.0, abs=1e-12)
    assert at == pytest.approx([0.25])


def test_grid_recovers_boundary_minimum():
    # center outside the box: minimum at the nearest corner
    value, at = grid_minimum(quadratic_vec([2.0, -3.0]), [0.0, 0.0], [1.0, 1.0], points=10_000)
    assert at == pytest.approx([1.0, 0.0])
    assert value == pytest.approx(1.0 + 9.0)

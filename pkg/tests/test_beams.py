import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from acoci.beams import (
    DEGENERATE_VALUE,
    IBeamSpec,
    cantilever_constraint,
    cantilever_problem,
    cantilever_weight,
    ibeam_area,
    ibeam_case,
    ibeam_cases,
    ibeam_deflection,
    ibeam_inertia,
    ibeam_problem,
    ibeam_stress,
)
from acoci.core import EvaluationError, ValidationError


class TestCantilever:
    def test_shape(self):
        p = cantilever_problem()
        assert p.dimension == 5 and len(p.constraints) == 1
        assert p.bounds.lower.tolist() == [0.01] * 5 and p.bounds.upper.tolist() == [100.0] * 5
        assert p.known_optimum == 1.3400

    def test_reported_solution(self):
        x = np.array([6.0082, 5.3229, 4.4879, 3.5039, 2.1509])
        assert cantilever_weight(x) == pytest.approx(1.3400, abs=1e-4)
        assert abs(cantilever_constraint(x)) < 1e-5

    def test_cubic_not_squared(self):
        # with 37/x2^2 the reported solution would be far outside the feasible set
        x = np.array([6.0082, 5.3229, 4.4879, 3.5039, 2.1509])
        squared = 61 / x[0] ** 3 + 37 / x[1] ** 2 + 19 / x[2] ** 3 + 7 / x[3] ** 3 + 1 / x[4] ** 3 - 1
        assert squared > 0.5
        assert cantilever_constraint(x) < 1e-5

    def test_unit_point(self):
        assert cantilever_weight(np.ones(5)) == pytest.approx(0.312)
        assert cantilever_constraint(np.ones(5)) == pytest.approx(124.0)

    def test_upper_corner(self):
        x = np.full(5, 100.0)
        assert cantilever_weight(x) == pytest.approx(31.2)
        assert cantilever_constraint(x) == pytest.approx(125 / 1e6 - 1)

    @given(st.lists(st.floats(0.01, 50.0), min_size=5, max_size=5), st.floats(0.1, 2.0))
    def test_weight_linear(self, x, alpha):
        x = np.array(x)
        assert cantilever_weight(alpha * x) == pytest.approx(alpha * cantilever_weight(x), rel=1e-12)

    # beyond ~20 the change in g from a small step drops below float resolution
    @given(st.lists(st.floats(0.01, 20.0), min_size=5, max_size=5), st.integers(0, 4), st.floats(1e-3, 1.0))
    def test_constraint_decreasing(self, x, i, step):
        x = np.array(x)
        y = x.copy()
        y[i] += step
        assert cantilever_constraint(y) < cantilever_constraint(x)


class TestIBeam:
    point = np.array([10.0, 10.0, 0.9, 0.9])

    def test_inertia(self):
        expected = 0.9 * 8.2**3 / 12 + 10 * 0.9**3 / 6 + 2 * 10 * 0.9 * (9.1 / 2) ** 2
        assert expected == pytest.approx(415.2126)
        assert ibeam_inertia(self.point) == pytest.approx(expected, rel=1e-14)

    def test_area(self):
        assert ibeam_area(self.point) == pytest.approx(25.38)

    def test_deflection(self):
        spec = IBeamSpec(length=200.0, load=600.0)
        assert ibeam_deflection(self.point, spec) == pytest.approx(600 * 8e6 / (48 * 20000 * 415.2126), rel=1e-12)
        assert ibeam_deflection(self.point, spec) == pytest.approx(12.04, abs=5e-3)

    def test_stress_formula(self):
        h, b, tw, tf = 50.0, 30.0, 2.0, 3.0
        spec = IBeamSpec(length=200.0, load=600.0)
        web = h - 2 * tf
        expected = 1.5 * 600 * 200 * h / (tw * web**3 + 2 * b * tw * (4 * tf**2 + 3 * h * web)) + 1.5 * 50 * 200 * b / (
            tw**3 * web + 2 * tw * b**3
        )
        assert ibeam_stress([h, b, tw, tf], spec) == pytest.approx(expected, rel=1e-14)

    def test_problem_constraints_normalized(self):
        p = ibeam_problem(200.0, 600.0)
        assert p.dimension == 4 and p.constraint_names == ("area", "stress")
        g_area, g_stress = (g(self.point) for g in p.constraints)
        assert g_area == pytest.approx(25.38 - 300.0)
        assert g_stress == pytest.approx(ibeam_stress(self.point, IBeamSpec(200.0, 600.0)) - 6.0)

    def test_degenerate_geometry(self):
        x = np.array([10.0, 20.0, 1.0, 6.0])  # h < 2 t_f
        with pytest.raises(EvaluationError):
            ibeam_inertia(x)
        with pytest.raises(EvaluationError):
            ibeam_stress(x, IBeamSpec(100.0, 100.0))
        p = ibeam_problem(100.0, 100.0)
        assert p.objective(x) == DEGENERATE_VALUE
        assert p.constraints[1](x) == DEGENERATE_VALUE

    @pytest.mark.parametrize("field", ["length", "load", "lateral_load", "modulus"])
    def test_spec_positive(self, field):
        kwargs = dict(length=1.0, load=1.0, lateral_load=1.0, modulus=1.0)
        kwargs[field] = 0.0
        with pytest.raises(ValidationError):
            IBeamSpec(**kwargs)

    @given(
        st.floats(10, 100), st.floats(10, 60), st.floats(0.9, 6), st.floats(0.9, 6)
    )
    def test_section_positive(self, h, b, tw, tf):
        assume(h > 2 * tf + 1e-9)
        x = [h, b, tw, tf]
        assert ibeam_inertia(x) > 0 and ibeam_area(x) > 0

    @given(st.floats(1.0, 1e6), st.floats(1.0, 1e6))
    def test_deflection_decreasing_in_inertia(self, i1, i2):
        spec = IBeamSpec(200.0, 600.0)
        d = lambda inertia: spec.load * spec.length**3 / (48 * spec.modulus * inertia)
        if i1 < i2:
            assert d(i1) > d(i2)


class TestCases:
    @pytest.mark.parametrize(
        "n, length, load, target",
        [(1, 120, 652, 0.002018), (4, 150, 200, 0.001209), (5, 345, 264, 0.020572),
         (8, 310, 675, 0.045771), (10, 220, 355, 0.006771)],
    )
    def test_values(self, n, length, load, target):
        c = ibeam_case(n)
        assert (c.length, c.load, c.target) == (length, load, target)

    def test_count_and_order(self):
        assert [c.case for c in ibeam_cases()] == list(range(1, 11))

    def test_unknown(self):
        with pytest.raises(KeyError):
            ibeam_case(11)

    def test_problem_name(self):
        assert ibeam_case(3).problem().name == "ibeam-case3"

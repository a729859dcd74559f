import math

import numpy as np
import pytest

from shoa.benchmarks import SHIFTED_SPECS, BasicFunctionId, eval_basic, make_all_shifted, make_shifted
from shoa.benchmarks.basic import canonical_optimum
from shoa.benchmarks.shifted import ShiftedSpec
from shoa.core import Bounds, EvalCounter, RngStream, evaluate

PROBLEMS = make_all_shifted()

EXACT_ZERO_AT_SHIFT = ["F1", "F2", "F3", "F4", "F5", "F6", "F9", "F10", "F11", "F12", "F13"]


def brute_force_schwefel_sine_min():
    # independent 1-D oracle: scan-and-refine the per-dimension term
    def term(x):
        return -x * math.sin(math.sqrt(abs(x)))

    lo, hi = -500.0, 500.0
    for _ in range(8):
        xs = np.linspace(lo, hi, 20001)
        vals = [term(x) for x in xs]
        i = int(np.argmin(vals))
        lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, len(xs) - 1)]
    return term(0.5 * (lo + hi)), 0.5 * (lo + hi)


class TestBasicValues:
    @pytest.mark.parametrize(
        "fid",
        [
            BasicFunctionId.SPHERE,
            BasicFunctionId.RASTRIGIN,
            BasicFunctionId.ACKLEY,
            BasicFunctionId.GRIEWANK,
            BasicFunctionId.SCHWEFEL_2_22,
            BasicFunctionId.SCHWEFEL_1_2,
            BasicFunctionId.MAX_ABS,
            BasicFunctionId.STEP,
            BasicFunctionId.PENALIZED_1,
            BasicFunctionId.PENALIZED_2,
            BasicFunctionId.WEIERSTRASS,
        ],
    )
    def test_zero_at_origin(self, fid):
        assert eval_basic(fid, np.zeros(10)) == 0.0

    def test_rosenbrock_zero_at_all_ones(self):
        assert eval_basic(BasicFunctionId.ROSENBROCK, np.ones(10)) == 0.0

    def test_sphere_hand_value(self):
        assert eval_basic(BasicFunctionId.SPHERE, np.full(10, 30.0)) == 9000.0

    def test_schwefel_sine_matches_brute_force(self):
        per_dim, argmin = brute_force_schwefel_sine_min()
        assert argmin == pytest.approx(420.9687, abs=1e-3)
        value = eval_basic(BasicFunctionId.SCHWEFEL_SINE, np.full(10, 420.9687))
        assert value == pytest.approx(10 * per_dim, abs=1e-6)
        assert value == pytest.approx(-4189.829, abs=0.01)

    def test_quartic_noise_needs_rng(self):
        with pytest.raises(ValueError):
            eval_basic(BasicFunctionId.QUARTIC_NOISE, np.zeros(10))

    def test_quartic_noise_adds_single_uniform_draw(self):
        z = np.full(10, 0.5)
        base = float(np.sum(np.arange(1, 11) * 0.5**4))
        value = eval_basic(BasicFunctionId.QUARTIC_NOISE, z, RngStream(7))
        noise = value - base
        assert 0.0 <= noise < 1.0
        # same stream state, same draw
        again = eval_basic(BasicFunctionId.QUARTIC_NOISE, z, RngStream(7))
        assert value == again

    def test_penalty_walls(self):
        inside = eval_basic(BasicFunctionId.PENALIZED_1, np.full(10, 9.0))
        outside = eval_basic(BasicFunctionId.PENALIZED_1, np.full(10, 12.0))
        assert outside > inside + 100.0 * (12.0 - 10.0) ** 4

    def test_canonical_optimum_table(self):
        assert np.array_equal(canonical_optimum(BasicFunctionId.ROSENBROCK, 4), np.ones(4))
        assert np.array_equal(canonical_optimum(BasicFunctionId.SPHERE, 4), np.zeros(4))


class TestShiftedProblems:
    @pytest.mark.parametrize("name", EXACT_ZERO_AT_SHIFT)
    def test_value_at_shift_is_exactly_zero(self, name):
        problem = PROBLEMS[name]
        shift = SHIFTED_SPECS[name].shift
        counter = EvalCounter()
        assert evaluate(problem, shift, counter, RngStream(0)) == 0.0

    def test_rastrigin_unit_offset(self):
        problem = PROBLEMS["F9"]
        point = SHIFTED_SPECS["F9"].shift.copy()
        point[0] += 1.0
        assert problem.objective(point) == pytest.approx(1.0, abs=1e-12)

    def test_step_plateau_around_shift(self):
        problem = PROBLEMS["F6"]
        point = SHIFTED_SPECS["F6"].shift + 0.4
        assert problem.objective(point) == 0.0

    def test_schwefel_sine_optimum_value(self):
        problem = PROBLEMS["F8"]
        point = SHIFTED_SPECS["F8"].shift + 420.9687
        assert problem.objective(point) == pytest.approx(-418.9829 * 10, abs=0.01)

    def test_deterministic_functions_bitwise_repeatable(self):
        rng = RngStream(0)
        for name, problem in PROBLEMS.items():
            if not problem.deterministic:
                continue
            x = problem.bounds.lower + rng.random(10) * (
                problem.bounds.upper - problem.bounds.lower
            )
            assert problem.objective(x) == problem.objective(x)

    def test_f7_noise_comes_from_the_stream(self):
        problem = PROBLEMS["F7"]
        assert not problem.deterministic
        x = np.zeros(10)
        stream = RngStream(11)
        v1 = problem.objective(x, stream)
        v2 = problem.objective(x, stream)
        assert v1 != v2  # stream advanced
        assert problem.objective(x, RngStream(11)) == v1

    def test_shift_outside_bounds_rejected(self):
        spec = ShiftedSpec(
            name="bad",
            base=BasicFunctionId.SPHERE,
            shift=np.full(10, 200.0),
            bounds=Bounds.symmetric(100.0, 10),
        )
        with pytest.raises(ValueError):
            make_shifted(spec)

    def test_dimensions_and_ranges(self):
        for name, spec in SHIFTED_SPECS.items():
            assert PROBLEMS[name].dimension == 10
            assert spec.bounds.dimension == 10

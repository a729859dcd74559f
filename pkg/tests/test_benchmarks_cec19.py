import math
from fractions import Fraction

import numpy as np
import pytest

from shoa.benchmarks.cec19 import (
    DIMENSIONS,
    RANGES,
    Cec19Id,
    chebyshev_boundary,
    eval_cec19,
    make_all_cec19,
)
from shoa.benchmarks import data_io

T8_COEFFS = np.array([128.0, 0, -256, 0, 160, 0, -32, 0, 1])
INV_HILBERT_4 = np.array(
    [16, -120, 240, -140,
     -120, 1200, -2700, 1680,
     240, -2700, 6480, -4200,
     -140, 1680, -4200, 2800], dtype=float,
)


class TestTableLayout:
    def test_dimensions(self):
        assert DIMENSIONS[Cec19Id.C01] == 9
        assert DIMENSIONS[Cec19Id.C02] == 16
        assert DIMENSIONS[Cec19Id.C03] == 18
        for fid in (Cec19Id.C04, Cec19Id.C05, Cec19Id.C06, Cec19Id.C07,
                    Cec19Id.C08, Cec19Id.C09, Cec19Id.C10):
            assert DIMENSIONS[fid] == 10

    def test_ranges(self):
        assert RANGES[Cec19Id.C01] == 8192.0
        assert RANGES[Cec19Id.C02] == 16384.0
        assert RANGES[Cec19Id.C03] == 4.0
        assert RANGES[Cec19Id.C04] == 100.0

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            eval_cec19(Cec19Id.C04, np.full(10, 101.0))
        with pytest.raises(ValueError):
            eval_cec19(Cec19Id.C03, np.full(18, 4.5))

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            eval_cec19(Cec19Id.C01, np.zeros(10))


class TestKnownValues:
    def test_chebyshev_at_exact_coefficients(self):
        assert eval_cec19(Cec19Id.C01, T8_COEFFS) == 1.0

    def test_chebyshev_boundary_against_exact_rational(self):
        # independent oracle: the same recurrence in exact arithmetic
        a, b = Fraction(1), Fraction(6, 5)
        for _ in range(7):
            a, b = b, Fraction(12, 5) * b - a
        assert chebyshev_boundary(8) == pytest.approx(float(b), abs=1e-9)

    def test_chebyshev_constants_file_matches_recurrence(self):
        values = data_io.load_data_file("cec19_c01.txt", "C01", 9, 2)
        assert values[0] == chebyshev_boundary(8)
        assert values[1] == 32 * 9

    def test_inverse_hilbert_at_exact_inverse(self):
        assert eval_cec19(Cec19Id.C02, INV_HILBERT_4) == pytest.approx(1.0, abs=1e-8)

    def test_hilbert_file_entries_are_exact(self):
        values = data_io.load_data_file("cec19_c02.txt", "C02", 16, 16)
        for i in range(4):
            for j in range(4):
                assert values[4 * i + j] == float(Fraction(1, i + j + 1))

    def test_lennard_jones_matches_pair_loop(self):
        rng = np.random.default_rng(2)
        x = rng.uniform(-2.0, 2.0, 18)
        pts = x.reshape(6, 3)
        energy = 12.7120622568
        for i in range(6):
            for j in range(i + 1, 6):
                d2 = float(np.sum((pts[i] - pts[j]) ** 2))
                energy += d2**-6 - 2.0 * d2**-3
        assert eval_cec19(Cec19Id.C03, x) == pytest.approx(1.0 + energy, rel=1e-12)

    def test_lennard_jones_coincident_atoms_finite(self):
        x = np.zeros(18)
        value = eval_cec19(Cec19Id.C03, x)
        assert math.isfinite(value)
        assert value > 1e19

    @pytest.mark.parametrize(
        "fid,point,expected,tol",
        [
            (Cec19Id.C04, np.zeros(10), 1.0, 0.0),
            (Cec19Id.C05, np.zeros(10), 1.0, 0.0),
            (Cec19Id.C06, np.zeros(10), 1.0, 0.0),
            (Cec19Id.C08, np.zeros(10), 1.0, 0.0),
            (Cec19Id.C09, np.full(10, -20.0), 1.0, 0.0),
            (Cec19Id.C10, np.zeros(10), 1.0, 1e-8),
            (Cec19Id.C07, np.zeros(10), 1.0, 1e-3),
        ],
    )
    def test_scaled_optima(self, fid, point, expected, tol):
        assert eval_cec19(fid, point) == pytest.approx(expected, abs=tol)

    def test_expanded_schaffer_wraps_around(self):
        rng = np.random.default_rng(4)
        x = rng.uniform(-100, 100, 10)
        z = x  # no scaling for C08
        total = 0.0
        for i in range(10):
            a, b = z[i], z[(i + 1) % 10]
            s = a * a + b * b
            total += 0.5 + (math.sin(math.sqrt(s)) ** 2 - 0.5) / (1 + 0.001 * s) ** 2
        assert eval_cec19(Cec19Id.C08, x) == pytest.approx(1.0 + total, rel=1e-12)

    def test_modified_schwefel_wrap_branches(self):
        # drive |10x + shift| beyond 500 in both directions and compare
        # against a literal transcription of the three-branch form
        def oracle(x):
            d = 10
            total = 418.9829 * d
            for xi in x:
                w = 10.0 * xi + 4.209687462275036e2
                if abs(w) <= 500:
                    g = w * math.sin(math.sqrt(abs(w)))
                elif w > 500:
                    m = 500 - math.fmod(w, 500)
                    g = m * math.sin(math.sqrt(abs(m))) - (w - 500) ** 2 / (10000 * d)
                else:
                    m = math.fmod(abs(w), 500) - 500
                    g = m * math.sin(math.sqrt(abs(m))) - (w + 500) ** 2 / (10000 * d)
                total -= g
            return total + 1.0

        for x in (np.full(10, 70.0), np.full(10, -90.0), np.linspace(-100, 100, 10)):
            assert eval_cec19(Cec19Id.C07, x) == pytest.approx(oracle(x), rel=1e-12)


def _floor_check(samples_per_function):
    rng = np.random.default_rng(12345)
    for fid in Cec19Id:
        dim, half = DIMENSIONS[fid], RANGES[fid]
        worst = np.inf
        for _ in range(samples_per_function):
            x = rng.uniform(-half, half, dim)
            worst = min(worst, eval_cec19(fid, x))
        assert worst >= 1.0 - 1e-9, f"{fid.value} dipped to {worst}"


class TestValueFloor:
    def test_no_value_below_one(self):
        _floor_check(2000)

    @pytest.mark.slow
    def test_no_value_below_one_full_scale(self):
        _floor_check(100_000)


def test_problems_registered():
    problems = make_all_cec19()
    assert set(problems) == {f"C{i:02d}" for i in range(1, 11)}
    for p in problems.values():
        assert p.known_min == 1.0

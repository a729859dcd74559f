"""Four real-world design problems, constraint-handled by death penalty.

gear_train       4 continuous teeth counts in [12, 60]; squared gap to
                 the target ratio 1/6.931 (unconstrained inside the box)
three_bar_truss  2 cross-sections in [0, 1]; weight under three stress
                 constraints
antenna_sll      4 element positions in (0, 2.25) wavelengths before a
                 fixed fifth at 2.25; worst side-lobe level in dB over a
                 broadside pattern grid, under spacing constraints
fm_wave          6 sinusoid parameters in [-6.4, 6.35]; squared error of
                 a three-term additive waveform against a fixed target
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .core import INFEASIBLE, Bounds, Problem

TARGET_GEAR_RATIO = 1.0 / 6.931

TRUSS_LENGTH = 100.0  # cm
TRUSS_LOAD = 2.0      # kN/cm^2
TRUSS_STRESS = 2.0    # kN/cm^2

FM_TARGET = (1.0, 5.0, 1.5, 4.8, 2.0, 4.9)
FM_THETA = 2.0 * math.pi / 100.0
_FM_T = np.arange(1, 101, dtype=float)
_FM_TARGET_WAVE = (
    FM_TARGET[0] * np.sin(FM_TARGET[1] * _FM_T * FM_THETA)
    + FM_TARGET[2] * np.sin(FM_TARGET[3] * _FM_T * FM_THETA)
    + FM_TARGET[4] * np.sin(FM_TARGET[5] * _FM_T * FM_THETA)
)


def gear_ratio(v: Sequence[float]) -> float:
    a, b, c, d = v
    return (a * b) / (c * d)


def gear_train(v: Sequence[float]) -> float:
    """Squared error between the achieved and desired gear ratio."""
    gap = TARGET_GEAR_RATIO - gear_ratio(v)
    return gap * gap


def gear_train_rounded(v: Sequence[float]) -> tuple[tuple[int, int, int, int], float, float]:
    """Integer-teeth report: nearest whole-tooth design with its error
    and ratio (the classical problem uses integer teeth; the continuous
    relaxation is what gets optimized here)."""
    teeth = tuple(int(round(x)) for x in v)
    return teeth, gear_train(teeth), gear_ratio(teeth)


def truss_constraint_values(v: Sequence[float]) -> tuple[float, float, float]:
    """The three stress expressions; feasible iff all are <= 0.
    Degenerate cross-sections make the denominators vanish and the
    constraints evaluate as violated."""
    x1, x2 = float(v[0]), float(v[1])
    root2 = math.sqrt(2.0)
    den_a = root2 * x1 * x1 + 2.0 * x1 * x2
    den_b = root2 * x2 + x1
    big = math.inf
    c1 = (root2 * x1 + x2) / den_a * TRUSS_LOAD - TRUSS_STRESS if den_a != 0.0 else big
    c2 = x2 / den_a * TRUSS_LOAD - TRUSS_STRESS if den_a != 0.0 else big
    c3 = 1.0 / den_b * TRUSS_LOAD - TRUSS_STRESS if den_b != 0.0 else big
    return c1, c2, c3


def truss_weight(v: Sequence[float]) -> float:
    x1, x2 = float(v[0]), float(v[1])
    return (2.0 * math.sqrt(2.0) * x1 + x2) * TRUSS_LENGTH


def truss_feasible(v: Sequence[float]) -> bool:
    if not (0.0 <= v[0] <= 1.0 and 0.0 <= v[1] <= 1.0):
        return False
    c1, c2, c3 = truss_constraint_values(v)
    return c1 <= 0.0 and c2 <= 0.0 and c3 <= 0.0


def three_bar_truss(v: Sequence[float]) -> float:
    """Truss weight, or INFEASIBLE when any stress constraint is violated."""
    if not truss_feasible(v):
        return INFEASIBLE
    return truss_weight(v)


@dataclass(frozen=True)
class AntennaConfig:
    """Pattern-evaluation settings; the defaults are a broadside beam
    with a ten-degree main-lobe exclusion on a half-degree grid."""

    steering_deg: float = 90.0
    beam_half_width_deg: float = 10.0
    grid_step_deg: float = 0.5
    fixed_element: float = 2.25
    min_spacing: float = 0.25
    floor_db: float = -400.0
    margin: float = 1e-12


_DEFAULT_ANTENNA = AntennaConfig()


def _antenna_grid(cfg: AntennaConfig) -> tuple[np.ndarray, float]:
    theta = np.deg2rad(np.arange(0.0, 180.0 + cfg.grid_step_deg / 2, cfg.grid_step_deg))
    theta_deg = np.rad2deg(theta)
    keep = np.abs(theta_deg - cfg.steering_deg) >= cfg.beam_half_width_deg
    cos_term = np.cos(theta) - math.cos(math.radians(cfg.steering_deg))
    return cos_term[keep], math.cos(math.radians(cfg.steering_deg))


_GRID_CACHE: dict[AntennaConfig, np.ndarray] = {}


def antenna_feasible(v: Sequence[float], cfg: AntennaConfig = _DEFAULT_ANTENNA) -> bool:
    x = np.asarray(v, dtype=float)
    m = cfg.margin
    if np.any(x <= m) or np.any(x >= cfg.fixed_element - m):
        return False
    xmin = float(np.min(x))
    if not (0.125 + m < xmin <= 2.0):
        return False
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            if abs(x[i] - x[j]) <= cfg.min_spacing + m:
                return False
    return True


def _antenna_pattern_db(v: Sequence[float], cfg: AntennaConfig) -> float:
    grid = _GRID_CACHE.get(cfg)
    if grid is None:
        grid = _antenna_grid(cfg)[0]
        _GRID_CACHE[cfg] = grid
    x = np.asarray(v, dtype=float)
    # G(theta) = sum_i cos(2 pi x_i u) + cos(2 pi * fixed * u), u = cos(theta) - cos(theta_s)
    pattern = np.cos(2.0 * np.pi * np.outer(grid, x)).sum(axis=1)
    pattern += np.cos(2.0 * np.pi * cfg.fixed_element * grid)
    main = len(x) + 1.0  # G at the steering angle: every cosine is 1
    mag = np.abs(pattern) / main
    with np.errstate(divide="ignore"):
        db = 20.0 * np.log10(mag)
    db = np.maximum(db, cfg.floor_db)
    return float(np.max(db))


def antenna_sll(v: Sequence[float], cfg: AntennaConfig = _DEFAULT_ANTENNA) -> float:
    """Worst side-lobe level in dB relative to the main beam, or
    INFEASIBLE when spacing/range constraints fail."""
    if not antenna_feasible(v, cfg):
        return INFEASIBLE
    return _antenna_pattern_db(v, cfg)


def fm_wave(p: Sequence[float]) -> np.ndarray:
    a1, w1, a2, w2, a3, w3 = (float(c) for c in p)
    arg = _FM_T * FM_THETA
    return a1 * np.sin(w1 * arg) + a2 * np.sin(w2 * arg) + a3 * np.sin(w3 * arg)


def fm_wave_error(p: Sequence[float]) -> float:
    """Sum of squared deviations from the target waveform over t=1..100."""
    diff = fm_wave(p) - _FM_TARGET_WAVE
    return float(np.sum(diff * diff))


def apply_death_penalty(problem: Problem) -> Problem:
    """Fold the constraint check into the objective so direct calls also
    return INFEASIBLE on violation; the constraint list stays in place,
    so budgeted evaluation still skips the objective (and the counter)
    for infeasible points, and the unguarded objective is kept for the
    evaluator's fast path."""
    if not problem.constraints:
        return problem
    constraints = tuple(problem.constraints)
    inner = problem.objective

    def guarded(x, *args):
        for predicate in constraints:
            if not predicate(x):
                return INFEASIBLE
        return inner(x, *args)

    return replace(problem, objective=guarded, objective_unchecked=inner)


def make_gear_train() -> Problem:
    return Problem(
        id="gear_train",
        dimension=4,
        bounds=Bounds(np.full(4, 12.0), np.full(4, 60.0)),
        objective=lambda x: gear_train(x),
        known_min=0.0,
    )


def make_three_bar_truss() -> Problem:
    return apply_death_penalty(
        Problem(
            id="three_bar_truss",
            dimension=2,
            bounds=Bounds(np.zeros(2), np.ones(2)),
            objective=lambda x: truss_weight(x),
            constraints=(truss_feasible,),
        )
    )


def make_antenna(cfg: AntennaConfig = _DEFAULT_ANTENNA) -> Problem:
    return apply_death_penalty(
        Problem(
            id="antenna_sll",
            dimension=4,
            bounds=Bounds(np.zeros(4), np.full(4, cfg.fixed_element)),
            objective=lambda x, _cfg=cfg: _antenna_pattern_db(x, _cfg),
            constraints=(lambda x, _cfg=cfg: antenna_feasible(x, _cfg),),
        )
    )


def make_fm_wave() -> Problem:
    return Problem(
        id="fm_wave",
        dimension=6,
        bounds=Bounds(np.full(6, -6.4), np.full(6, 6.35)),
        objective=lambda x: fm_wave_error(x),
        known_min=0.0,
    )


def make_all_engineering() -> dict[str, Problem]:
    problems = [make_gear_train(), make_three_bar_truss(), make_antenna(), make_fm_wave()]
    return {p.id: p for p in problems}

"""Shifted single-function benchmarks F1-F13 (dimension 10).

The shift relocates the canonical optimum to s: the objective is
f_base((x - s) + m) where m is the canonical minimizer (all-ones for
Rosenbrock, origin otherwise), so f(s) is the minimum value for every
entry. Rotations are identity throughout (no published matrices to
apply).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import Bounds, Problem, RngStream
from .basic import BasicFunctionId, canonical_optimum, eval_basic

DIMENSION = 10


@dataclass(frozen=True)
class ShiftedSpec:
    name: str
    base: BasicFunctionId
    shift: np.ndarray
    bounds: Bounds
    known_min: float = 0.0
    deterministic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "shift", np.asarray(self.shift, dtype=float))
        if self.shift.shape != self.bounds.lower.shape:
            raise ValueError("shift and bounds dimensions differ")


def make_shifted(spec: ShiftedSpec) -> Problem:
    if not np.all((spec.shift > spec.bounds.lower) & (spec.shift < spec.bounds.upper)):
        raise ValueError(f"{spec.name}: shift must lie strictly inside the bounds")
    base = spec.base
    offset = spec.shift - canonical_optimum(base, spec.bounds.dimension)
    if spec.deterministic:
        def objective(x, _base=base, _o=offset):
            return eval_basic(_base, x - _o)
    else:
        def objective(x, rng: RngStream, _base=base, _o=offset):
            return eval_basic(_base, x - _o, rng)
    return Problem(
        id=spec.name,
        dimension=spec.bounds.dimension,
        bounds=spec.bounds,
        objective=objective,
        deterministic=spec.deterministic,
        known_min=spec.known_min,
    )


def _spec(name, base, half_width, shift_value, known_min=0.0, deterministic=True):
    return ShiftedSpec(
        name=name,
        base=base,
        shift=np.full(DIMENSION, float(shift_value)),
        bounds=Bounds.symmetric(half_width, DIMENSION),
        known_min=known_min,
        deterministic=deterministic,
    )


SHIFTED_SPECS: dict[str, ShiftedSpec] = {
    s.name: s
    for s in [
        _spec("F1", BasicFunctionId.SPHERE, 100.0, -30.0),
        _spec("F2", BasicFunctionId.SCHWEFEL_2_22, 10.0, -3.0),
        _spec("F3", BasicFunctionId.SCHWEFEL_1_2, 100.0, -30.0),
        _spec("F4", BasicFunctionId.MAX_ABS, 100.0, -30.0),
        _spec("F5", BasicFunctionId.ROSENBROCK, 30.0, -15.0),
        _spec("F6", BasicFunctionId.STEP, 100.0, -75.0),
        _spec("F7", BasicFunctionId.QUARTIC_NOISE, 1.28, -0.25, deterministic=False),
        _spec("F8", BasicFunctionId.SCHWEFEL_SINE, 500.0, -300.0,
              known_min=-418.9829 * DIMENSION),
        _spec("F9", BasicFunctionId.RASTRIGIN, 5.12, -2.0),
        _spec("F10", BasicFunctionId.ACKLEY, 32.0, 0.0),
        _spec("F11", BasicFunctionId.GRIEWANK, 600.0, -400.0),
        _spec("F12", BasicFunctionId.PENALIZED_1, 50.0, -30.0),
        _spec("F13", BasicFunctionId.PENALIZED_2, 50.0, -10.0),
    ]
}


def make_all_shifted() -> dict[str, Problem]:
    return {name: make_shifted(spec) for name, spec in SHIFTED_SPECS.items()}

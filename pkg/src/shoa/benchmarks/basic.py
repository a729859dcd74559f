"""Canonical dimension-generic test functions.

All take the already-shifted vector z and return a float; every function
has its minimum value 0 at the stated optimum. QUARTIC_NOISE is the one
stochastic entry and additionally takes the run's random stream.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from ..core import RngStream

_WEIERSTRASS_A = 0.5
_WEIERSTRASS_B = 3.0
_WEIERSTRASS_KMAX = 20
_W_AK = _WEIERSTRASS_A ** np.arange(_WEIERSTRASS_KMAX + 1)
_W_BK = _WEIERSTRASS_B ** np.arange(_WEIERSTRASS_KMAX + 1)
# Per-dimension value at z=0, computed through the same vectorized path as
# weierstrass() itself so the subtraction cancels bitwise at the optimum.
_W_OFFSET = float(
    (np.cos(2.0 * np.pi * np.outer(np.array([0.5]), _W_BK)) @ _W_AK)[0]
)


class BasicFunctionId(Enum):
    SPHERE = "sphere"
    SCHWEFEL_2_22 = "schwefel_2_22"
    SCHWEFEL_1_2 = "schwefel_1_2"
    MAX_ABS = "max_abs"
    ROSENBROCK = "rosenbrock"
    STEP = "step"
    QUARTIC_NOISE = "quartic_noise"
    SCHWEFEL_SINE = "schwefel_sine"
    RASTRIGIN = "rastrigin"
    ACKLEY = "ackley"
    GRIEWANK = "griewank"
    PENALIZED_1 = "penalized_1"
    PENALIZED_2 = "penalized_2"
    WEIERSTRASS = "weierstrass"


def sphere(z: np.ndarray) -> float:
    return float(np.sum(z * z))


def schwefel_2_22(z: np.ndarray) -> float:
    a = np.abs(z)
    return float(np.sum(a) + np.prod(a))


def schwefel_1_2(z: np.ndarray) -> float:
    c = np.cumsum(z)
    return float(np.sum(c * c))


def max_abs(z: np.ndarray) -> float:
    return float(np.max(np.abs(z)))


def rosenbrock(z: np.ndarray) -> float:
    a = z[:-1]
    b = z[1:]
    return float(np.sum(100.0 * (b - a * a) ** 2 + (a - 1.0) ** 2))


def step(z: np.ndarray) -> float:
    s = np.floor(z + 0.5)
    return float(np.sum(s * s))


def quartic_noise(z: np.ndarray, rng: RngStream) -> float:
    idx = np.arange(1, z.size + 1)
    return float(np.sum(idx * z**4) + rng.random())


def schwefel_sine(z: np.ndarray) -> float:
    return float(np.sum(-z * np.sin(np.sqrt(np.abs(z)))))


def rastrigin(z: np.ndarray) -> float:
    return float(np.sum(z * z - 10.0 * np.cos(2.0 * np.pi * z) + 10.0))


def ackley(z: np.ndarray) -> float:
    # Grouped so the value at the origin cancels to exactly zero.
    n = z.size
    return float(
        20.0 * (1.0 - np.exp(-0.2 * np.sqrt(np.sum(z * z) / n)))
        + (np.e - np.exp(np.sum(np.cos(2.0 * np.pi * z)) / n))
    )


def griewank(z: np.ndarray) -> float:
    idx = np.arange(1, z.size + 1, dtype=float)
    return float(np.sum(z * z) / 4000.0 - np.prod(np.cos(z / np.sqrt(idx))) + 1.0)


def _u_penalty(z: np.ndarray, a: float, k: float, m: float) -> float:
    over = np.maximum(z - a, 0.0)
    under = np.maximum(-z - a, 0.0)
    return float(k * np.sum(over**m + under**m))


def penalized_1(z: np.ndarray) -> float:
    # Optimum normalized to z=0: with y = 1 + z/4, sin(pi*y) = -sin(pi*z/4),
    # so the usual form reduces to the one below and every term vanishes
    # exactly at the origin. The u-walls sit at |z| = 10.
    n = z.size
    q = z / 4.0
    s = np.sin(np.pi * q) ** 2
    core = (
        10.0 * s[0]
        + np.sum(q[:-1] ** 2 * (1.0 + 10.0 * s[1:]))
        + q[-1] ** 2
    )
    return float(np.pi / n * core + _u_penalty(z, 10.0, 100.0, 4.0))


def penalized_2(z: np.ndarray) -> float:
    # Optimum normalized to z=0 (the usual all-ones minimizer translated
    # to the origin); u-walls at |z| = 5.
    core = (
        np.sin(3.0 * np.pi * z[0]) ** 2
        + np.sum(z[:-1] ** 2 * (1.0 + np.sin(3.0 * np.pi * z[1:]) ** 2))
        + z[-1] ** 2 * (1.0 + np.sin(2.0 * np.pi * z[-1]) ** 2)
    )
    return float(0.1 * core + _u_penalty(z, 5.0, 100.0, 4.0))


def weierstrass(z: np.ndarray) -> float:
    # a=0.5, b=3, kmax=20; the constant offset makes the value 0 at z=0.
    inner = np.cos(2.0 * np.pi * np.outer(z + 0.5, _W_BK)) @ _W_AK
    return float(np.sum(inner) - z.size * _W_OFFSET)


_DETERMINISTIC = {
    BasicFunctionId.SPHERE: sphere,
    BasicFunctionId.SCHWEFEL_2_22: schwefel_2_22,
    BasicFunctionId.SCHWEFEL_1_2: schwefel_1_2,
    BasicFunctionId.MAX_ABS: max_abs,
    BasicFunctionId.ROSENBROCK: rosenbrock,
    BasicFunctionId.STEP: step,
    BasicFunctionId.SCHWEFEL_SINE: schwefel_sine,
    BasicFunctionId.RASTRIGIN: rastrigin,
    BasicFunctionId.ACKLEY: ackley,
    BasicFunctionId.GRIEWANK: griewank,
    BasicFunctionId.PENALIZED_1: penalized_1,
    BasicFunctionId.PENALIZED_2: penalized_2,
    BasicFunctionId.WEIERSTRASS: weierstrass,
}


def eval_basic(fid: BasicFunctionId, z: np.ndarray, rng: RngStream | None = None) -> float:
    """Evaluate a basic function at z. QUARTIC_NOISE requires rng."""
    if fid == BasicFunctionId.QUARTIC_NOISE:
        if rng is None:
            raise ValueError("QUARTIC_NOISE needs a random stream")
        return quartic_noise(z, rng)
    return _DETERMINISTIC[fid](np.asarray(z, dtype=float))


def canonical_optimum(fid: BasicFunctionId, dimension: int) -> np.ndarray:
    """Minimizer of the canonical form (all-ones for Rosenbrock, origin
    for everything else). Shifted problems relocate this point to the
    shift vector."""
    if fid == BasicFunctionId.ROSENBROCK:
        return np.ones(dimension)
    return np.zeros(dimension)

"""Composition benchmarks F14-F19: weighted blends of ten shifted,
stretched basic functions with per-component bias.

Weight of component i at x is a Gaussian of the distance to its optimum
o_i; the dominant component keeps its weight while all others are damped
by (1 - max_w^10), weights are then normalized. Component values are
rescaled by a common constant against f_i evaluated at the stretched box
corner so heterogeneous functions mix on comparable scales. The global
minimum is 0 at o_1 (bias_1 = 0). Rotations are identity.

The component optima were drawn once, uniformly in the search box, from
the fixed seed below, and are shipped as checksummed data files; the
generator is kept so the files can be re-derived and verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import Bounds, Problem, RngStream
from .basic import BasicFunctionId, eval_basic
from .data_io import load_data_file

DIMENSION = 10
N_COMPONENTS = 10
SCALE_CONSTANT = 2000.0
BIAS = np.arange(N_COMPONENTS, dtype=float) * 100.0
OPTIMA_SEED = 23101900  # base seed; file k uses OPTIMA_SEED + k

_SP = BasicFunctionId.SPHERE
_GR = BasicFunctionId.GRIEWANK
_AC = BasicFunctionId.ACKLEY
_RA = BasicFunctionId.RASTRIGIN
_WE = BasicFunctionId.WEIERSTRASS


@dataclass(frozen=True)
class CompositeSpec:
    name: str
    components: tuple[BasicFunctionId, ...]
    sigma: np.ndarray
    lam: np.ndarray
    optima: np.ndarray
    bias: np.ndarray = field(default_factory=lambda: BIAS.copy())

    def __post_init__(self):
        object.__setattr__(self, "sigma", np.asarray(self.sigma, dtype=float))
        object.__setattr__(self, "lam", np.asarray(self.lam, dtype=float))
        object.__setattr__(self, "optima", np.asarray(self.optima, dtype=float))
        if len(self.components) != N_COMPONENTS:
            raise ValueError("composite specs take exactly ten components")
        if self.optima.shape != (N_COMPONENTS, DIMENSION):
            raise ValueError("optima must be ten vectors of length ten")

    def f_max(self) -> np.ndarray:
        corner = np.full(DIMENSION, 5.0)
        return np.array(
            [
                abs(eval_basic(fid, corner / self.lam[i]))
                for i, fid in enumerate(self.components)
            ]
        )


def eval_composite(spec: CompositeSpec, x: np.ndarray, f_max: np.ndarray | None = None) -> float:
    x = np.asarray(x, dtype=float)
    if f_max is None:
        f_max = spec.f_max()
    diff = x - spec.optima
    sq = np.sum(diff * diff, axis=1)
    w = np.exp(-sq / (2.0 * DIMENSION * spec.sigma**2))
    imax = int(np.argmax(w))
    wmax = w[imax]
    scaled = w * (1.0 - wmax**10)
    scaled[imax] = wmax
    total = scaled.sum()
    if total <= 0.0:
        scaled = np.full(N_COMPONENTS, 1.0)
        total = float(N_COMPONENTS)
    weights = scaled / total
    value = 0.0
    for i, fid in enumerate(spec.components):
        if weights[i] == 0.0:
            continue
        fi = eval_basic(fid, diff[i] / spec.lam[i])
        value += weights[i] * (SCALE_CONSTANT * fi / f_max[i] + spec.bias[i])
    return float(value)


def composite_weights(spec: CompositeSpec, x: np.ndarray) -> np.ndarray:
    """Normalized component weights at x (exposed for property checks)."""
    diff = np.asarray(x, dtype=float) - spec.optima
    sq = np.sum(diff * diff, axis=1)
    w = np.exp(-sq / (2.0 * DIMENSION * spec.sigma**2))
    imax = int(np.argmax(w))
    wmax = w[imax]
    scaled = w * (1.0 - wmax**10)
    scaled[imax] = wmax
    total = scaled.sum()
    if total <= 0.0:
        return np.full(N_COMPONENTS, 1.0 / N_COMPONENTS)
    return scaled / total


def generate_optima(index: int) -> np.ndarray:
    """Re-derive the component optima for composite number ``index``
    (0 = F14 .. 5 = F19) from the fixed seed."""
    rng = RngStream(OPTIMA_SEED + index)
    return rng.uniform(-5.0, 5.0, (N_COMPONENTS, DIMENSION))


def _load_optima(index: int, name: str) -> np.ndarray:
    values = load_data_file(
        f"composite_optima_{name.lower()}.txt", name, DIMENSION, N_COMPONENTS * DIMENSION
    )
    return values.reshape(N_COMPONENTS, DIMENSION)


def _uniform(value: float) -> np.ndarray:
    return np.full(N_COMPONENTS, value)


def _build_specs() -> dict[str, CompositeSpec]:
    ones = _uniform(1.0)
    lam_cf4 = np.array([5 / 32, 5 / 32, 1, 1, 10, 10, 5 / 100, 5 / 100, 5 / 100, 5 / 100])
    lam_cf5 = np.array([1 / 5, 1 / 5, 10, 10, 5 / 100, 5 / 100, 5 / 32, 5 / 32, 5 / 100, 5 / 100])
    sigma_cf6 = np.arange(1, N_COMPONENTS + 1) / 10.0
    lam_cf6 = sigma_cf6 * lam_cf5
    cf4_components = (_AC, _AC, _RA, _RA, _WE, _WE, _GR, _GR, _SP, _SP)
    cf5_components = (_RA, _RA, _WE, _WE, _GR, _GR, _AC, _AC, _SP, _SP)
    table = [
        ("F14", (_SP,) * 10, ones, _uniform(5 / 100)),
        ("F15", (_GR,) * 10, ones, _uniform(5 / 100)),
        ("F16", (_GR,) * 10, ones, ones),
        ("F17", cf4_components, ones, lam_cf4),
        ("F18", cf5_components, ones, lam_cf5),
        ("F19", cf5_components, sigma_cf6, lam_cf6),
    ]
    specs = {}
    for index, (name, components, sigma, lam) in enumerate(table):
        specs[name] = CompositeSpec(
            name=name,
            components=components,
            sigma=sigma,
            lam=lam,
            optima=_load_optima(index, name),
        )
    return specs


def make_composite(spec: CompositeSpec) -> Problem:
    f_max = spec.f_max()

    def objective(x, _spec=spec, _f_max=f_max):
        return eval_composite(_spec, x, _f_max)

    return Problem(
        id=spec.name,
        dimension=DIMENSION,
        bounds=Bounds.symmetric(5.0, DIMENSION),
        objective=objective,
        known_min=0.0,
    )


def composite_specs() -> dict[str, CompositeSpec]:
    return _build_specs()


def make_all_composites() -> dict[str, Problem]:
    return {name: make_composite(spec) for name, spec in _build_specs().items()}

"""The ten hundred-digit-challenge functions C01-C10.

C01-C03 are the fixed-dimension problems (Chebyshev polynomial fitting,
inverse Hilbert matrix, Lennard-Jones cluster); C04-C10 map the common
[-100, 100] box onto each function's natural domain by a per-function
scale factor and apply the canonical formula. Every function carries a
+1 offset so the global minimum value is 1. No shifts or rotations.

The Chebyshev boundary target and the Hilbert matrix entries ship as
checksummed data files; both are exact consequences of the problem
statements (a three-term recurrence and 1/(i+j+1)) and the tests
re-derive them independently.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from ..core import Bounds, Problem
from .basic import ackley, griewank, rastrigin, weierstrass
from .data_io import load_data_file


class Cec19Id(Enum):
    C01 = "C01"
    C02 = "C02"
    C03 = "C03"
    C04 = "C04"
    C05 = "C05"
    C06 = "C06"
    C07 = "C07"
    C08 = "C08"
    C09 = "C09"
    C10 = "C10"


DIMENSIONS = {
    Cec19Id.C01: 9,
    Cec19Id.C02: 16,
    Cec19Id.C03: 18,
    **{fid: 10 for fid in (Cec19Id.C04, Cec19Id.C05, Cec19Id.C06, Cec19Id.C07,
                           Cec19Id.C08, Cec19Id.C09, Cec19Id.C10)},
}

RANGES = {
    Cec19Id.C01: 8192.0,
    Cec19Id.C02: 16384.0,
    Cec19Id.C03: 4.0,
    **{fid: 100.0 for fid in (Cec19Id.C04, Cec19Id.C05, Cec19Id.C06, Cec19Id.C07,
                              Cec19Id.C08, Cec19Id.C09, Cec19Id.C10)},
}

_LJ_ENERGY_OFFSET = 12.7120622568  # magnitude of the 6-atom cluster minimum
_SCHWEFEL_OFFSET_PER_DIM = 418.9829
_SCHWEFEL_SHIFT = 4.209687462275036e2


def _c01_constants() -> tuple[float, int]:
    values = load_data_file("cec19_c01.txt", "C01", 9, 2)
    return float(values[0]), int(values[1])


def _c02_hilbert() -> np.ndarray:
    return load_data_file("cec19_c02.txt", "C02", 16, 16).reshape(4, 4)


_C01_BOUNDARY, _C01_SAMPLE = None, None
_C02_H = None


def chebyshev_boundary(degree: int) -> float:
    """T_degree(1.2) via the three-term recurrence (independent of the
    shipped constant; used to generate and verify it)."""
    a, b = 1.0, 1.2
    for _ in range(degree - 1):
        a, b = b, 2.4 * b - a
    return b


def _chebyshev_fit(x: np.ndarray) -> float:
    # Storn's polynomial fitting: x holds the coefficients of a degree
    # D-1 polynomial (leading first). Penalize leaving [-1, 1] on an
    # equispaced grid over [-1, 1] and falling short of T_{D-1}(1.2) at
    # the endpoints +-1.2.
    global _C01_BOUNDARY, _C01_SAMPLE
    if _C01_BOUNDARY is None:
        _C01_BOUNDARY, _C01_SAMPLE = _c01_constants()
    d = x.size
    ys = -1.0 + 2.0 * np.arange(_C01_SAMPLE + 1) / _C01_SAMPLE
    px = np.full(ys.size, x[0])
    for j in range(1, d):
        px = ys * px + x[j]
    over = np.abs(px) > 1.0
    total = float(np.sum((1.0 - np.abs(px[over])) ** 2))
    for endpoint in (-1.2, 1.2):
        pv = x[0]
        for j in range(1, d):
            pv = endpoint * pv + x[j]
        if pv < _C01_BOUNDARY:
            total += pv * pv
    return total


def _inverse_hilbert(x: np.ndarray) -> float:
    global _C02_H
    if _C02_H is None:
        _C02_H = _c02_hilbert()
    z = x.reshape(4, 4)
    w = _C02_H @ z - np.eye(4)
    return float(np.sum(np.abs(w)))


def _lennard_jones(x: np.ndarray) -> float:
    pts = x.reshape(6, 3)
    diff = pts[:, None, :] - pts[None, :, :]
    sq = np.sum(diff * diff, axis=2)
    iu = np.triu_indices(6, k=1)
    ud = sq[iu]
    energy = _LJ_ENERGY_OFFSET
    # ud is the squared distance, so d^-12 = ud^-6 and d^-6 = ud^-3;
    # near-coincident atoms get a large finite penalty instead of inf.
    safe = ud > 1e-10
    energy += float(np.sum(ud[safe] ** -6 - 2.0 * ud[safe] ** -3))
    energy += float(np.sum(~safe)) * 1e20
    return energy


def _modified_schwefel(x: np.ndarray) -> float:
    w = 10.0 * x + _SCHWEFEL_SHIFT
    d = x.size
    total = _SCHWEFEL_OFFSET_PER_DIM * d
    for wi in w:
        if abs(wi) <= 500.0:
            g = wi * np.sin(np.sqrt(abs(wi)))
        elif wi > 500.0:
            m = 500.0 - np.fmod(wi, 500.0)
            g = m * np.sin(np.sqrt(abs(m))) - (wi - 500.0) ** 2 / (10000.0 * d)
        else:
            m = np.fmod(abs(wi), 500.0) - 500.0
            g = m * np.sin(np.sqrt(abs(m))) - (wi + 500.0) ** 2 / (10000.0 * d)
        total -= g
    return float(total)


def _expanded_schaffer_f6(x: np.ndarray) -> float:
    z = x
    z_next = np.roll(z, -1)
    sq = z * z + z_next * z_next
    g = 0.5 + (np.sin(np.sqrt(sq)) ** 2 - 0.5) / (1.0 + 0.001 * sq) ** 2
    return float(np.sum(g))


def _happy_cat(x: np.ndarray) -> float:
    z = 0.05 * x
    n = z.size
    s = float(np.sum(z * z))
    return abs(s - n) ** 0.25 + (0.5 * s + float(np.sum(z))) / n + 0.5


_EVALUATORS = {
    Cec19Id.C01: _chebyshev_fit,
    Cec19Id.C02: _inverse_hilbert,
    Cec19Id.C03: _lennard_jones,
    Cec19Id.C04: lambda x: rastrigin(0.0512 * x),
    Cec19Id.C05: lambda x: griewank(6.0 * x),
    Cec19Id.C06: lambda x: weierstrass(0.005 * x),
    Cec19Id.C07: _modified_schwefel,
    Cec19Id.C08: _expanded_schaffer_f6,
    Cec19Id.C09: _happy_cat,
    Cec19Id.C10: lambda x: ackley(0.32 * x),
}


def eval_cec19(fid: Cec19Id, x: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    if x.size != DIMENSIONS[fid]:
        raise ValueError(f"{fid.value} takes vectors of length {DIMENSIONS[fid]}")
    half = RANGES[fid]
    if np.any(np.abs(x) > half):
        raise ValueError(f"{fid.value} input outside [-{half}, {half}]")
    return _EVALUATORS[fid](x) + 1.0


def make_cec19(fid: Cec19Id) -> Problem:
    dim = DIMENSIONS[fid]

    def objective(x, _fid=fid):
        return eval_cec19(_fid, x)

    return Problem(
        id=fid.value,
        dimension=dim,
        bounds=Bounds.symmetric(RANGES[fid], dim),
        objective=objective,
        known_min=1.0,
    )


def make_all_cec19() -> dict[str, Problem]:
    return {fid.value: make_cec19(fid) for fid in Cec19Id}

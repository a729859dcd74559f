"""Comparator optimizers run under the same budget and determinism
contract as the shrike optimizer: a PSO and a GA with the standard
comparison-protocol settings, plus uniform random search as a sanity
floor.

Note the protocol's PSO draws its velocity factors r1, r2 on [-1, 1]
(not the canonical [0, 1]); both ranges are available through PsoParams.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    EvalCounter,
    Problem,
    RngStream,
    RunResult,
    clamp,
    evaluate,
    init_position,
)


class BaselineKind(Enum):
    PSO = "pso"
    GA = "ga"
    RANDOM = "random"


@dataclass(frozen=True)
class PsoParams:
    c1: float = 2.0
    c2: float = 2.0
    inertia: float = 0.6
    r_low: float = -1.0
    r_high: float = 1.0
    agents: int = 30

    def __post_init__(self):
        if self.r_low >= self.r_high:
            raise ValueError("r_low must be below r_high")
        if self.agents < 1:
            raise ValueError("agents must be >= 1")


@dataclass(frozen=True)
class GaParams:
    crossover_rate: float = 0.8
    mutation_rate: float = 0.05
    elitism: int = 1
    agents: int = 30

    def __post_init__(self):
        if not (0.0 <= self.crossover_rate <= 1.0 and 0.0 <= self.mutation_rate <= 1.0):
            raise ValueError("rates must lie in [0, 1]")
        if not 0 <= self.elitism < self.agents:
            raise ValueError("elitism must lie in [0, agents)")


@dataclass(frozen=True)
class RandomParams:
    agents: int = 30

    def __post_init__(self):
        if self.agents < 1:
            raise ValueError("agents must be >= 1")


def _run_pso(problem, iterations, rng, params: PsoParams) -> tuple[np.ndarray, float, list[float], EvalCounter]:
    counter = EvalCounter()
    dim = problem.dimension
    positions = [init_position(problem.bounds, rng) for _ in range(params.agents)]
    velocities = [np.zeros(dim) for _ in range(params.agents)]
    fitness = [evaluate(problem, p, counter, rng) for p in positions]
    pbest = [p.copy() for p in positions]
    pbest_fit = list(fitness)
    gi = int(np.argmin(fitness))
    gbest, gbest_fit = positions[gi].copy(), fitness[gi]
    curve = [gbest_fit]
    for _ in range(iterations):
        for i in range(params.agents):
            r1 = rng.uniform(params.r_low, params.r_high, dim)
            r2 = rng.uniform(params.r_low, params.r_high, dim)
            velocities[i] = (
                params.inertia * velocities[i]
                + params.c1 * r1 * (pbest[i] - positions[i])
                + params.c2 * r2 * (gbest - positions[i])
            )
            positions[i] = clamp(positions[i] + velocities[i], problem.bounds)
            f = evaluate(problem, positions[i], counter, rng)
            if f < pbest_fit[i]:
                pbest[i] = positions[i].copy()
                pbest_fit[i] = f
            if f < gbest_fit:
                gbest = positions[i].copy()
                gbest_fit = f
        curve.append(gbest_fit)
    return gbest, gbest_fit, curve, counter


def _roulette_pick(cumulative: np.ndarray, rng: RngStream) -> int:
    u = rng.random() * cumulative[-1]
    return int(np.searchsorted(cumulative, u, side="right"))


def _run_ga(problem, iterations, rng, params: GaParams) -> tuple[np.ndarray, float, list[float], EvalCounter]:
    counter = EvalCounter()
    dim = problem.dimension
    n = params.agents
    population = [init_position(problem.bounds, rng) for _ in range(n)]
    fitness = [evaluate(problem, p, counter, rng) for p in population]
    bi = int(np.argmin(fitness))
    best, best_fit = population[bi].copy(), fitness[bi]
    curve = [best_fit]
    lower, upper = problem.bounds.lower, problem.bounds.upper
    for _ in range(iterations):
        # roulette wheel on rank-inverted fitness: best rank weighs n,
        # worst weighs 1 (raw inversion breaks on non-positive values)
        order = sorted(range(n), key=lambda i: (fitness[i], i))
        weights = np.empty(n)
        for rank_pos, idx in enumerate(order):
            weights[idx] = float(n - rank_pos)
        cumulative = np.cumsum(weights)

        next_pop: list[np.ndarray] = []
        next_fit: list[float] = []
        for idx in order[: params.elitism]:
            next_pop.append(population[idx].copy())
            next_fit.append(fitness[idx])
        while len(next_pop) < n:
            pa = population[_roulette_pick(cumulative, rng)]
            pb = population[_roulette_pick(cumulative, rng)]
            if rng.random() < params.crossover_rate:
                lam = rng.random()
                child = lam * pa + (1.0 - lam) * pb
            else:
                child = pa.copy()
            mutate = rng.random(dim) < params.mutation_rate
            resets = rng.uniform(0.0, 1.0, dim)
            if np.any(mutate):
                child = np.where(mutate, lower + resets * (upper - lower), child)
            child = clamp(child, problem.bounds)
            f = evaluate(problem, child, counter, rng)
            next_pop.append(child)
            next_fit.append(f)
        population, fitness = next_pop, next_fit
        gi = int(np.argmin(fitness))
        if fitness[gi] < best_fit:
            best, best_fit = population[gi].copy(), fitness[gi]
        curve.append(best_fit)
    return best, best_fit, curve, counter


def _run_random(problem, iterations, rng, params: RandomParams) -> tuple[np.ndarray, float, list[float], EvalCounter]:
    counter = EvalCounter()
    best = None
    best_fit = np.inf
    curve = []
    for _ in range(iterations + 1):  # init batch + one batch per iteration
        for _ in range(params.agents):
            p = init_position(problem.bounds, rng)
            f = evaluate(problem, p, counter, rng)
            if best is None or f < best_fit:
                best, best_fit = p, f
        curve.append(best_fit)
    return best, best_fit, curve, counter


_RUNNERS = {
    BaselineKind.PSO: (_run_pso, PsoParams),
    BaselineKind.GA: (_run_ga, GaParams),
    BaselineKind.RANDOM: (_run_random, RandomParams),
}


def run_baseline(
    kind: BaselineKind,
    problem: Problem,
    iterations: int,
    seed: int,
    params=None,
) -> RunResult:
    """Run one baseline for the given iteration budget; the curve has
    iterations + 1 entries (index 0 is the initialized population)."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    runner, params_cls = _RUNNERS[kind]
    if params is None:
        params = params_cls()
    elif not isinstance(params, params_cls):
        raise TypeError(f"{kind.value} expects {params_cls.__name__}")
    start = time.perf_counter()
    rng = RngStream(seed)
    best, best_fit, curve, counter = runner(problem, iterations, rng, params)
    return RunResult(
        best_position=np.asarray(best, dtype=float).copy(),
        best_fitness=best_fit,
        curve=curve,
        evaluations=counter.count,
        wall_time=time.perf_counter() - start,
    )

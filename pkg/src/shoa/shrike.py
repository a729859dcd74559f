"""The shrike optimizer: nest-structured swarm search.

Each of N nests holds a male parent, a female parent, and B nestlings.
Every ``regeneration_period`` iterations a nest is pruned to its two
best solutions, which breed B fresh nestlings around an extrapolation
of the two parents; the nest's best solution found so far competes for
a parent slot, so regeneration never discards the nest's record. In
between, birds feed: parents try a self-feed move, nestlings try a
male-feed move, then a female-feed move, then an exploration jump.
Acceptance is greedy throughout (strict improvement only); nest and
global bests are tracked as separate records.

Random draws come from a single per-run stream in a fixed order:
nest-major, bird-minor, dimension-minor. Per iteration that is: the
regeneration draws (B nestlings x D each, when due), then per bird in
collection order the female-feed draws (D, only when attempted) and the
exploration draws (D + 1, only when reached). The self/male feed factor
is a deterministic schedule and consumes no draws. Noise-bearing
objectives draw from the same stream at evaluation time.
"""

from __future__ import annotations

import math
import time
from enum import IntEnum
from typing import Callable, Optional

import numpy as np

from .core import (
    Bird,
    EvalCounter,
    Nest,
    Problem,
    Role,
    RngStream,
    RunConfig,
    RunResult,
    SwarmState,
    clamp,
    evaluate,
    init_position,
)


class FeedMode(IntEnum):
    SELF = 0    # parents feed themselves
    MALE = 1    # nestling fed by the male parent
    FEMALE = 2  # nestling fed by the female parent


def feed_factor(dimension_index: int, dimension: int, t: int, t_max: int) -> float:
    """Deterministic feeding decay for coordinate i (1-based).

    exp(-2 * (i/D) * t/T); equals 1 at t=0 and decays to exp(-2) at
    (i=D, t=T). Narrows the self/male feed steps as the run ages.
    """
    return math.exp(-2.0 * (dimension_index / dimension) * (t / t_max))


def feed_vector(dimension: int, t: int, t_max: int) -> np.ndarray:
    """feed_factor for every coordinate; shared by all birds at iteration t."""
    idx = np.arange(1, dimension + 1, dtype=float)
    return np.exp(-2.0 * (idx / dimension) * (t / t_max))


def generate_nestlings(
    nest: Nest,
    b: int,
    problem: Problem,
    counter: EvalCounter,
    rng: RngStream,
) -> Nest:
    """Breed B nestlings into a two-parent nest.

    Each nestling sits at female + (female - male) + r with r uniform in
    [-1, 1] per dimension: an extrapolation past the female, dithered by
    a unit box. Clamped, evaluated, and recorded in the nest's best.
    """
    male, female = nest.parents()
    fpos = female.position
    diff = fpos - male.position
    for _ in range(b):
        r = rng.uniform(-1.0, 1.0, problem.dimension)
        position = clamp(fpos + diff + r, problem.bounds)
        fitness = evaluate(problem, position, counter, rng)
        nest.birds.append(Bird(position, fitness, Role.NESTLING))
        nest.local_best.offer(position, fitness)
    return nest


def candidate_position(
    bird: Bird,
    mode: FeedMode,
    male: Bird,
    female: Bird,
    t: int,
    cfg: RunConfig,
    rng: RngStream,
    problem: Problem,
    feed: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Next-position proposal for one feeding attempt.

    SELF:   bird + bird * r          (r = deterministic feed vector)
    MALE:   bird + r * (bird - male) + bird
    FEMALE: bird + r' * (bird - female) + sin(alpha_const)
    where r' is uniform [-1, 1] per dimension and the sine term is a
    scalar added to every coordinate. Result is clamped.
    """
    pos = bird.position
    if mode == FeedMode.SELF:
        if feed is None:
            feed = feed_vector(problem.dimension, t, cfg.max_iterations)
        delta = pos * feed
    elif mode == FeedMode.MALE:
        if feed is None:
            feed = feed_vector(problem.dimension, t, cfg.max_iterations)
        delta = feed * (pos - male.position) + pos
    else:
        r = rng.uniform(-1.0, 1.0, problem.dimension)
        delta = r * (pos - female.position) + math.sin(cfg.alpha_const)
    return clamp(pos + delta, problem.bounds)


def explore(
    bird: Bird,
    problem: Problem,
    counter: EvalCounter,
    rng: RngStream,
) -> Bird:
    """Randomized jump for a nestling both feeds failed.

    Proposes clamp(bird + (r * bird + sin(alpha))) with r uniform [-1, 1]
    per dimension and alpha uniform on [0, D], evaluates it, and keeps it
    only on strict improvement, like every other move. The wide
    multiplicative proposal supplies the diversity.
    """
    r = rng.uniform(-1.0, 1.0, problem.dimension)
    alpha = rng.uniform(0.0, float(problem.dimension))
    position = clamp(bird.position + (r * bird.position + math.sin(alpha)), problem.bounds)
    fitness = evaluate(problem, position, counter, rng)
    if fitness < bird.fitness:
        bird.position = position
        bird.fitness = fitness
    return bird


def _assign_parent_roles(first: Bird, second: Bird) -> tuple[Bird, Bird]:
    """Fitter bird becomes the male parent; stable on ties."""
    if second.fitness < first.fitness:
        first, second = second, first
    first.role = Role.MALE_PARENT
    second.role = Role.FEMALE_PARENT
    return first, second


def regenerate_nest(
    nest: Nest,
    cfg: RunConfig,
    problem: Problem,
    counter: EvalCounter,
    rng: RngStream,
) -> Nest:
    """Prune to the two best solutions and breed a fresh clutch.

    The candidate pool is the current birds, plus the nest's best-ever
    record when it is strictly better than every live bird (a discovery
    the feeding phase has since lost); the best of the pool becomes the
    male parent, the runner-up the female. Keeping the record in play is
    what lets the nest converge instead of forgetting its discoveries
    between clutches.
    """
    pool = list(nest.birds)
    if len(pool) < 2:
        raise ValueError("a nest needs at least two birds")
    record = nest.local_best
    if record.fitness < min(bird.fitness for bird in pool):
        pool.append(Bird(record.position.copy(), record.fitness, Role.NESTLING))
    order = sorted(range(len(pool)), key=lambda i: (pool[i].fitness, i))
    male, female = _assign_parent_roles(pool[order[0]], pool[order[1]])
    nest.birds = [male, female]
    return generate_nestlings(nest, cfg.nestlings, problem, counter, rng)


def step(
    state: SwarmState,
    problem: Problem,
    cfg: RunConfig,
    rng: RngStream,
) -> SwarmState:
    """One iteration: optional regeneration, the feeding cascade for every
    bird, then local- and global-best bookkeeping."""
    t = state.iteration
    if t % cfg.regeneration_period == 0:
        for nest in state.nests:
            regenerate_nest(nest, cfg, problem, counter=state.evaluations, rng=rng)

    counter = state.evaluations
    feed = feed_vector(problem.dimension, t, cfg.max_iterations)
    lower, upper = problem.bounds.lower, problem.bounds.upper
    sin_alpha = math.sin(cfg.alpha_const)
    dim = problem.dimension
    fdim = float(dim)
    uniform = rng.uniform
    minimum, maximum = np.minimum, np.maximum
    sin = math.sin

    # parents sit at indices 0 and 1 of every nest (regeneration
    # rebuilds lists that way); nestlings follow
    for nest in state.nests:
        birds = nest.birds
        male, female = _assign_parent_roles(birds[0], birds[1])
        for parent in (birds[0], birds[1]):
            pos = parent.position
            candidate = minimum(maximum(pos + pos * feed, lower), upper)
            fitness = evaluate(problem, candidate, counter, rng)
            if fitness < parent.fitness:
                parent.position = candidate
                parent.fitness = fitness
        male_pos = male.position
        female_pos = female.position
        for bird in birds[2:]:
            pos = bird.position
            # male feed
            candidate = minimum(maximum(pos + feed * (pos - male_pos) + pos, lower), upper)
            fitness = evaluate(problem, candidate, counter, rng)
            if fitness < bird.fitness:
                bird.position = candidate
                bird.fitness = fitness
                continue
            # female feed
            r = uniform(-1.0, 1.0, dim)
            candidate = minimum(maximum(pos + r * (pos - female_pos) + sin_alpha, lower), upper)
            fitness = evaluate(problem, candidate, counter, rng)
            if fitness < bird.fitness:
                bird.position = candidate
                bird.fitness = fitness
                continue
            # exploration
            r = uniform(-1.0, 1.0, dim)
            candidate = minimum(maximum(pos + (r * pos + sin(uniform(0.0, fdim))), lower), upper)
            fitness = evaluate(problem, candidate, counter, rng)
            if fitness < bird.fitness:
                bird.position = candidate
                bird.fitness = fitness
        nest.record_birds()

    state.refresh_global_best()
    state.iteration = t + 1
    return state


def run(
    problem: Problem,
    cfg: RunConfig,
    observer: Optional[Callable[[SwarmState], None]] = None,
) -> RunResult:
    """Full run: initialize N two-parent nests, record the iteration-0
    best, then apply ``step`` max_iterations times.

    ``observer``, when given, is called with the state after
    initialization and after every step (used by invariant checks).
    """
    start = time.perf_counter()
    rng = RngStream(cfg.seed)
    counter = EvalCounter()

    nests = []
    for _ in range(cfg.nests):
        birds = []
        for _ in range(2):
            position = init_position(problem.bounds, rng)
            fitness = evaluate(problem, position, counter, rng)
            birds.append(Bird(position, fitness, Role.NESTLING))
        _assign_parent_roles(birds[0], birds[1])
        nests.append(Nest(birds))

    state = SwarmState(nests, counter)
    curve = [state.global_best.fitness]
    if observer is not None:
        observer(state)

    for _ in range(cfg.max_iterations):
        step(state, problem, cfg, rng)
        curve.append(state.global_best.fitness)
        if observer is not None:
            observer(state)

    return RunResult(
        best_position=state.global_best.position.copy(),
        best_fitness=state.global_best.fitness,
        curve=curve,
        evaluations=counter.count,
        wall_time=time.perf_counter() - start,
    )

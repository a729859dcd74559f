"""Shared data model: problems, bounds, birds, nests, run configuration,
and the deterministic random-number contract used by every optimizer here.

Fitness convention: minimization over plain floats. The distinguished
sentinel ``INFEASIBLE`` is ``math.inf``; it compares worse than every
finite value, and objectives are required to return finite values (a
non-finite objective output aborts the run with ``EvaluationError``),
so ``inf`` can only ever mean "constraint-rejected".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Callable, Optional, Sequence

import numpy as np

INFEASIBLE: float = math.inf


def is_feasible(fitness: float) -> bool:
    return math.isfinite(fitness)


class EvaluationError(RuntimeError):
    """Objective returned NaN/inf: almost always a formula-transcription bug."""

    def __init__(self, problem_id: str, position: np.ndarray, value: float):
        super().__init__(
            f"non-finite objective value {value!r} on problem {problem_id!r} "
            f"at position {position.tolist()}"
        )
        self.problem_id = problem_id
        self.position = position
        self.value = value


class RngStream:
    """Deterministic random stream behind a 64-bit seed (PCG64).

    Identical seeds replay identical draw sequences, so every table and
    curve in the repository is reproducible. Consumers must draw in a
    fixed, documented order; for the shrike optimizer that order is
    nest-major, bird-minor, dimension-minor (see ``shoa.shrike``).

    API: ``random(size)`` uniform [0,1); ``uniform(low, high, size)``;
    ``integers(n)`` uniform int [0,n). The first two are bound straight
    to the generator (hot path).
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))
        self.random = self._gen.random
        self.uniform = self._gen.uniform

    def integers(self, n: int) -> int:
        """Uniform integer on [0, n)."""
        return int(self._gen.integers(n))


@dataclass(frozen=True)
class Bounds:
    """Box constraints. lower[i] < upper[i] is required for every i."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("lower and upper must be 1-D vectors of equal length")
        if lower.size < 1:
            raise ValueError("bounds need at least one dimension")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")

    @property
    def dimension(self) -> int:
        return self.lower.size

    @staticmethod
    def symmetric(half_width: float, dimension: int) -> "Bounds":
        return Bounds(np.full(dimension, -half_width), np.full(dimension, half_width))

    def contains(self, position: np.ndarray) -> bool:
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))


@dataclass(frozen=True)
class Problem:
    """A bounded minimization problem.

    ``objective`` maps a position vector to a float. Noise-bearing
    objectives (``deterministic=False``) take ``(position, rng)`` instead
    and draw their noise from the run's stream so replays stay exact.
    ``constraints`` are predicates returning True when satisfied; any
    violation short-circuits to INFEASIBLE without an objective call
    (death penalty). ``objective_unchecked``, when set, is the same
    objective without a redundant constraint guard; ``evaluate`` prefers
    it since it checks constraints itself.
    """

    id: str
    dimension: int
    bounds: Bounds
    objective: Callable[..., float]
    constraints: Sequence[Callable[[np.ndarray], bool]] = ()
    deterministic: bool = True
    known_min: Optional[float] = None
    objective_unchecked: Optional[Callable[..., float]] = None

    def __post_init__(self):
        if self.dimension != self.bounds.dimension:
            raise ValueError(
                f"problem {self.id!r}: dimension {self.dimension} does not match "
                f"bounds dimension {self.bounds.dimension}"
            )


class EvalCounter:
    """Counts objective calls. One instance per run."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


def init_position(bounds: Bounds, rng: RngStream) -> np.ndarray:
    """Draw a uniform position in the box: lower + u * (upper - lower)."""
    u = rng.random(bounds.dimension)
    return bounds.lower + u * (bounds.upper - bounds.lower)


def clamp(position: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Project each coordinate onto its interval."""
    return np.minimum(np.maximum(position, bounds.lower), bounds.upper)


def evaluate(
    problem: Problem,
    position: np.ndarray,
    counter: EvalCounter,
    rng: Optional[RngStream] = None,
) -> float:
    """Death-penalty evaluation.

    Returns INFEASIBLE if any constraint predicate fails (the objective
    is not called and the counter does not move); otherwise returns the
    objective value and increments the counter exactly once.
    """
    for predicate in problem.constraints:
        if not predicate(position):
            return INFEASIBLE
    objective = problem.objective_unchecked or problem.objective
    if problem.deterministic:
        value = objective(position)
    else:
        value = objective(position, rng)
    counter.count += 1
    if not math.isfinite(value):
        raise EvaluationError(problem.id, position, value)
    return value


class Role(IntEnum):
    MALE_PARENT = 0
    FEMALE_PARENT = 1
    NESTLING = 2


class Bird:
    """A candidate solution: position, fitness, and nest role."""

    __slots__ = ("position", "fitness", "role")

    def __init__(self, position: np.ndarray, fitness: float, role: Role):
        self.position = position
        self.fitness = fitness
        self.role = role


@dataclass
class BestRecord:
    """Best position/fitness ever seen; fitness is non-increasing."""

    position: np.ndarray
    fitness: float

    def offer(self, position: np.ndarray, fitness: float) -> None:
        if fitness < self.fitness:
            self.position = position.copy()
            self.fitness = fitness


class Nest:
    """A sub-population of two parents plus up to B nestlings."""

    __slots__ = ("birds", "local_best")

    def __init__(self, birds: list[Bird]):
        self.birds = birds
        best = min(birds, key=lambda b: b.fitness)
        self.local_best = BestRecord(best.position.copy(), best.fitness)

    def parents(self) -> tuple[Bird, Bird]:
        """(male, female); exactly one of each exists by construction."""
        male = female = None
        for bird in self.birds:
            if bird.role == Role.MALE_PARENT:
                male = bird
            elif bird.role == Role.FEMALE_PARENT:
                female = bird
        assert male is not None and female is not None
        return male, female

    def record_birds(self) -> None:
        for bird in self.birds:
            self.local_best.offer(bird.position, bird.fitness)


class SwarmState:
    """Full optimizer state for one run."""

    __slots__ = ("nests", "global_best", "iteration", "evaluations")

    def __init__(self, nests: list[Nest], counter: EvalCounter):
        self.nests = nests
        self.iteration = 0
        self.evaluations = counter
        best_nest = min(nests, key=lambda n: n.local_best.fitness)
        self.global_best = BestRecord(
            best_nest.local_best.position.copy(), best_nest.local_best.fitness
        )

    def refresh_global_best(self) -> None:
        for nest in self.nests:
            self.global_best.offer(nest.local_best.position, nest.local_best.fitness)


class BoundaryPolicy(IntEnum):
    CLAMP = 0


@dataclass(frozen=True)
class RunConfig:
    """Shrike optimizer parameters (defaults follow the standard protocol:
    15 nests of two parents, 7 nestlings, regeneration every 50 of 500
    iterations).

    ``alpha_const`` feeds the female-feed move through sin(alpha_const),
    a constant added to every coordinate. Its published value is
    unspecified; the default 0.0 makes the term vanish, which is the
    only regime that reproduces the reported convergence behavior (any
    sizeable constant, e.g. sin(1) = 0.84, biases every female-feed step
    along the all-ones direction and measurably stalls convergence on
    shifted benchmarks)."""

    nests: int = 15
    nestlings: int = 7
    regeneration_period: int = 50
    max_iterations: int = 500
    alpha_const: float = 0.0
    seed: int = 0
    boundary_policy: BoundaryPolicy = BoundaryPolicy.CLAMP

    def __post_init__(self):
        if self.nests < 1:
            raise ValueError("nests must be >= 1")
        if self.nestlings < 1:
            raise ValueError("nestlings must be >= 1")
        if not 1 <= self.regeneration_period <= self.max_iterations:
            raise ValueError("regeneration_period must lie in [1, max_iterations]")
        if self.boundary_policy != BoundaryPolicy.CLAMP:
            raise ValueError("CLAMP is the only boundary policy in v1")


@dataclass
class RunResult:
    """Outcome of a single run.

    ``curve[t]`` is the global best fitness after iteration t
    (t = 0 is the freshly initialized population), length
    max_iterations + 1, non-increasing, ending at ``best_fitness``.
    """

    best_position: np.ndarray
    best_fitness: float
    curve: list[float] = field(default_factory=list)
    evaluations: int = 0
    wall_time: float = 0.0

"""Shrike optimization algorithm with baselines, a benchmark suite,
constrained engineering problems, nonparametric statistics, and an
experiment-matrix harness."""

from .baselines import BaselineKind, GaParams, PsoParams, RandomParams, run_baseline
from .core import (
    INFEASIBLE,
    Bounds,
    EvalCounter,
    EvaluationError,
    Problem,
    RngStream,
    RunConfig,
    RunResult,
    clamp,
    evaluate,
    init_position,
    is_feasible,
)
from .registry import get_problem, problem_names
from .shrike import run

__version__ = "0.1.0"

__all__ = [
    "INFEASIBLE",
    "Bounds",
    "EvalCounter",
    "EvaluationError",
    "Problem",
    "RngStream",
    "RunConfig",
    "RunResult",
    "clamp",
    "evaluate",
    "init_position",
    "is_feasible",
    "BaselineKind",
    "PsoParams",
    "GaParams",
    "RandomParams",
    "run_baseline",
    "get_problem",
    "problem_names",
    "run",
    "__version__",
]

"""Experiment-matrix execution: one independent cell per (algorithm,
problem, round), each with a seed derived by hashing the cell key, so
any cell can be reproduced in isolation and cells can run in any order
or in parallel without changing the output files.
"""

from __future__ import annotations

import csv
import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .. import shrike
from ..baselines import BaselineKind, GaParams, PsoParams, RandomParams, run_baseline
from ..core import RunConfig, RunResult
from ..registry import get_problem
from .config import AlgorithmSpec, ExperimentConfig

RESULTS_FILE = "results.csv"
CURVES_FILE = "curves.csv"
ERRORS_FILE = "errors.csv"

RESULT_COLUMNS = [
    "algorithm", "problem", "round", "seed", "best_fitness",
    "feasible", "evaluations", "wall_ms", "best_position",
]


@dataclass(frozen=True)
class ResultRow:
    algorithm: str
    problem: str
    round: int
    seed: int
    best_fitness: float
    feasible: bool
    evaluations: int
    wall_ms: int
    best_position: tuple[float, ...]


@dataclass(frozen=True)
class CurveRecord:
    algorithm: str
    problem: str
    round: int
    values: tuple[float, ...]


def derive_seed(base_seed: int, algorithm: str, problem: str, round_index: int) -> int:
    """64-bit cell seed: SHA-256 of the pipe-joined cell key. Injective
    for all practical purposes and stable across platforms."""
    key = f"{base_seed}|{algorithm}|{problem}|{round_index}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def run_cell(spec: AlgorithmSpec, problem_name: str, iterations: int, seed: int) -> RunResult:
    """Execute one cell; equivalent to calling the optimizer directly."""
    problem = get_problem(problem_name)
    over = spec.override_dict()
    if spec.name == "shoa":
        cfg = RunConfig(
            nests=int(over.get("nests", 15)),
            nestlings=int(over.get("nestlings", 7)),
            regeneration_period=int(over.get("period", 50)),
            max_iterations=iterations,
            alpha_const=over.get("alpha", 0.0),
            seed=seed,
        )
        return shrike.run(problem, cfg)
    if spec.name == "pso":
        params = PsoParams(
            c1=over.get("c1", 2.0),
            c2=over.get("c2", 2.0),
            inertia=over.get("inertia", 0.6),
            r_low=over.get("r_low", -1.0),
            r_high=over.get("r_high", 1.0),
            agents=int(over.get("agents", 30)),
        )
        return run_baseline(BaselineKind.PSO, problem, iterations, seed, params)
    if spec.name == "ga":
        params = GaParams(
            crossover_rate=over.get("crossover", 0.8),
            mutation_rate=over.get("mutation", 0.05),
            elitism=int(over.get("elitism", 1)),
            agents=int(over.get("agents", 30)),
        )
        return run_baseline(BaselineKind.GA, problem, iterations, seed, params)
    if spec.name == "random":
        params = RandomParams(agents=int(over.get("agents", 30)))
        return run_baseline(BaselineKind.RANDOM, problem, iterations, seed, params)
    raise ValueError(f"unknown algorithm {spec.name!r}")


def _execute(args):
    spec, problem_name, round_index, iterations, seed = args
    try:
        result = run_cell(spec, problem_name, iterations, seed)
    except Exception as exc:  # a failing cell must not sink the matrix
        return (spec.label, problem_name, round_index, seed, None, f"{type(exc).__name__}: {exc}")
    return (spec.label, problem_name, round_index, seed, result, None)


def run_matrix(
    cfg: ExperimentConfig,
    jobs: int = 1,
) -> tuple[list[ResultRow], list[CurveRecord], list[tuple]]:
    """Run every (algorithm, problem, round) cell. Returns rows and curve
    records sorted by (algorithm label, problem, round) regardless of
    execution order, plus (label, problem, round, seed, message) tuples
    for cells that raised."""
    cells = [
        (spec, problem, rnd, cfg.iterations,
         derive_seed(cfg.base_seed, spec.label, problem, rnd))
        for spec in cfg.algorithms
        for problem in cfg.problems
        for rnd in range(cfg.rounds)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_execute, cells))
    else:
        outcomes = [_execute(cell) for cell in cells]

    rows: list[ResultRow] = []
    curves: list[CurveRecord] = []
    errors: list[tuple] = []
    for label, problem, rnd, seed, result, message in outcomes:
        if result is None:
            errors.append((label, problem, rnd, seed, message))
            continue
        rows.append(
            ResultRow(
                algorithm=label,
                problem=problem,
                round=rnd,
                seed=seed,
                best_fitness=result.best_fitness,
                feasible=math.isfinite(result.best_fitness),
                evaluations=result.evaluations,
                wall_ms=int(round(result.wall_time * 1000.0)),
                best_position=tuple(float(v) for v in result.best_position),
            )
        )
        curves.append(
            CurveRecord(algorithm=label, problem=problem, round=rnd,
                        values=tuple(float(v) for v in result.curve))
        )
    key = lambda r: (r.algorithm, r.problem, r.round)
    rows.sort(key=key)
    curves.sort(key=key)
    errors.sort(key=lambda e: (e[0], e[1], e[2]))
    return rows, curves, errors


def _format_position(position: tuple[float, ...]) -> str:
    return ";".join(f"{v:.17g}" for v in position)


def write_results(rows: list[ResultRow], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RESULT_COLUMNS)
        for r in rows:
            writer.writerow([
                r.algorithm, r.problem, r.round, r.seed,
                repr(r.best_fitness), "true" if r.feasible else "false",
                r.evaluations, r.wall_ms, _format_position(r.best_position),
            ])


def read_results(path: str | Path) -> list[ResultRow]:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            rows.append(
                ResultRow(
                    algorithm=rec["algorithm"],
                    problem=rec["problem"],
                    round=int(rec["round"]),
                    seed=int(rec["seed"]),
                    best_fitness=float(rec["best_fitness"]),
                    feasible=rec["feasible"] == "true",
                    evaluations=int(rec["evaluations"]),
                    wall_ms=int(rec["wall_ms"]),
                    best_position=tuple(
                        float(v) for v in rec["best_position"].split(";")
                    ),
                )
            )
    return rows


def write_curves(curves: list[CurveRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["algorithm", "problem", "round", "iteration", "global_best"])
        for c in curves:
            for iteration, value in enumerate(c.values):
                writer.writerow([c.algorithm, c.problem, c.round, iteration, repr(value)])


def read_curves(path: str | Path) -> list[CurveRecord]:
    grouped: dict[tuple, list[float]] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            key = (rec["algorithm"], rec["problem"], int(rec["round"]))
            grouped.setdefault(key, []).append(float(rec["global_best"]))
    return [
        CurveRecord(algorithm=a, problem=p, round=r, values=tuple(vals))
        for (a, p, r), vals in sorted(grouped.items())
    ]


def write_errors(errors: list[tuple], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["algorithm", "problem", "round", "seed", "error"])
        for row in errors:
            writer.writerow(row)


def run_to_directory(cfg: ExperimentConfig, jobs: int = 1) -> Path:
    """Run the matrix and persist results.csv / curves.csv (and
    errors.csv when any cell failed) under the config's output_dir."""
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows, curves, errors = run_matrix(cfg, jobs=jobs)
    write_results(rows, out / RESULTS_FILE)
    write_curves(curves, out / CURVES_FILE)
    if errors:
        write_errors(errors, out / ERRORS_FILE)
    return out

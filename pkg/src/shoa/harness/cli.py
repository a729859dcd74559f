"""Command-line entry point.

    shoa list                                  registry dump
    shoa run --config FILE [--jobs N]          run the experiment matrix
    shoa summarize --input DIR [--reference A] build report tables/curves
    shoa seed-check --config FILE              verify derived-seed uniqueness
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..registry import get_problem, problem_names
from .config import ConfigError, load_config
from .report import summarize
from .runner import (
    CURVES_FILE,
    RESULTS_FILE,
    derive_seed,
    read_curves,
    read_results,
    run_to_directory,
)


def _cmd_list(_args) -> int:
    for name in problem_names():
        problem = get_problem(name)
        lo = problem.bounds.lower
        hi = problem.bounds.upper
        box = f"[{lo.min():g}, {hi.max():g}]"
        known = "" if problem.known_min is None else f"  min={problem.known_min:g}"
        noise = "" if problem.deterministic else "  (stochastic)"
        print(f"{name:16s} D={problem.dimension:<3d} box={box}{known}{noise}")
    return 0


def _cmd_run(args) -> int:
    cfg = load_config(args.config)
    out = run_to_directory(cfg, jobs=args.jobs)
    cells = len(cfg.algorithms) * len(cfg.problems) * cfg.rounds
    print(f"ran {cells} cells -> {out / RESULTS_FILE}")
    return 0


def _cmd_summarize(args) -> int:
    input_dir = Path(args.input)
    rows = read_results(input_dir / RESULTS_FILE)
    curves = read_curves(input_dir / CURVES_FILE)
    written = summarize(rows, curves, input_dir, reference=args.reference)
    for name, path in written.items():
        print(f"{name}: {path}")
    return 0


def _cmd_seed_check(args) -> int:
    cfg = load_config(args.config)
    seeds = {}
    for spec in cfg.algorithms:
        for problem in cfg.problems:
            for rnd in range(cfg.rounds):
                seed = derive_seed(cfg.base_seed, spec.label, problem, rnd)
                key = (spec.label, problem, rnd)
                if seed in seeds:
                    print(f"collision: {key} and {seeds[seed]} share seed {seed}")
                    return 1
                seeds[seed] = key
    print(f"{len(seeds)} cells, all seeds distinct")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="shoa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the problem registry")

    p_run = sub.add_parser("run", help="run an experiment matrix")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--jobs", type=int, default=1)

    p_sum = sub.add_parser("summarize", help="build reports from a results directory")
    p_sum.add_argument("--input", required=True)
    p_sum.add_argument("--reference", default=None,
                       help="reference algorithm for pairwise tests (default: shoa)")

    p_seed = sub.add_parser("seed-check", help="verify derived seeds are unique")
    p_seed.add_argument("--config", required=True)

    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "summarize":
            return _cmd_summarize(args)
        if args.command == "seed-check":
            return _cmd_seed_check(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Experiment configuration: a line-oriented ``key = value`` file.

Grammar (one statement per line, ``#`` starts a comment):

    rounds      = <int>          # default 30
    iterations  = <int>          # default 500
    base_seed   = <int>          # default 0
    output_dir  = <path>         # default "results"
    algorithm   = <name> [opt=value ...]   # repeatable
    problem     = <registry name>          # repeatable

Algorithm names: shoa, pso, ga, random. Options per algorithm:

    shoa:   nests, nestlings, period, alpha, label
    pso:    c1, c2, inertia, r_low, r_high, agents, label
    ga:     crossover, mutation, elitism, agents, label
    random: agents, label

``label`` names the column in reports (defaults to the algorithm name);
listing the same algorithm twice requires distinct labels. Unknown keys
are rejected by name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..registry import get_problem

ALGORITHM_OPTIONS = {
    "shoa": {"nests": int, "nestlings": int, "period": int, "alpha": float},
    "pso": {"c1": float, "c2": float, "inertia": float, "r_low": float,
            "r_high": float, "agents": int},
    "ga": {"crossover": float, "mutation": float, "elitism": int, "agents": int},
    "random": {"agents": int},
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AlgorithmSpec:
    name: str
    label: str
    overrides: tuple[tuple[str, float], ...] = ()

    def override_dict(self) -> dict[str, float]:
        return dict(self.overrides)


@dataclass
class ExperimentConfig:
    algorithms: list[AlgorithmSpec] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)
    rounds: int = 30
    iterations: int = 500
    base_seed: int = 0
    output_dir: str = "results"

    def validate(self) -> None:
        if not self.algorithms:
            raise ConfigError("config names no algorithm")
        if not self.problems:
            raise ConfigError("config names no problem")
        if self.rounds < 1:
            raise ConfigError(f"rounds must be >= 1, got {self.rounds}")
        if self.iterations < 1:
            raise ConfigError(f"iterations must be >= 1, got {self.iterations}")
        labels = [a.label for a in self.algorithms]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"duplicate algorithm labels: {labels}")
        for name in self.problems:
            try:
                get_problem(name)
            except KeyError as exc:
                raise ConfigError(str(exc)) from None


def _parse_algorithm(value: str, line_no: int) -> AlgorithmSpec:
    parts = value.split()
    name = parts[0].lower()
    if name not in ALGORITHM_OPTIONS:
        raise ConfigError(
            f"line {line_no}: unknown algorithm {parts[0]!r} "
            f"(expected one of {', '.join(ALGORITHM_OPTIONS)})"
        )
    allowed = ALGORITHM_OPTIONS[name]
    label = name
    overrides = []
    for token in parts[1:]:
        if "=" not in token:
            raise ConfigError(f"line {line_no}: malformed option {token!r}")
        key, raw = token.split("=", 1)
        if key == "label":
            label = raw
            continue
        if key not in allowed:
            raise ConfigError(
                f"line {line_no}: unknown option {key!r} for algorithm {name!r}"
            )
        try:
            overrides.append((key, float(allowed[key](raw) if allowed[key] is int else raw)))
        except ValueError:
            raise ConfigError(f"line {line_no}: bad value for {key!r}: {raw!r}") from None
    return AlgorithmSpec(name=name, label=label, overrides=tuple(overrides))


_INT_KEYS = {"rounds", "iterations", "base_seed"}


def parse_config(text: str) -> ExperimentConfig:
    cfg = ExperimentConfig()
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected 'key = value', got {raw_line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "algorithm":
            cfg.algorithms.append(_parse_algorithm(value, line_no))
        elif key == "problem":
            cfg.problems.append(value)
        elif key in _INT_KEYS:
            try:
                setattr(cfg, key, int(value))
            except ValueError:
                raise ConfigError(f"line {line_no}: {key} takes an integer, got {value!r}") from None
        elif key == "output_dir":
            cfg.output_dir = value
        else:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
    cfg.validate()
    return cfg


def load_config(path: str | Path) -> ExperimentConfig:
    return parse_config(Path(path).read_text())

"""Name -> Problem registry: the shifted benchmarks F1-F13, composites
F14-F19, hundred-digit functions C01-C10, and the four engineering
problems. Problems are immutable and safe to share, so each is built
once."""

from __future__ import annotations

from .benchmarks import make_all_cec19, make_all_composites, make_all_shifted
from .core import Problem
from .engineering import make_all_engineering

_REGISTRY: dict[str, Problem] | None = None


def _build() -> dict[str, Problem]:
    registry: dict[str, Problem] = {}
    registry.update(make_all_shifted())
    registry.update(make_all_composites())
    registry.update(make_all_cec19())
    registry.update(make_all_engineering())
    return registry


def problem_names() -> list[str]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build()
    return list(_REGISTRY)


def get_problem(name: str) -> Problem:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build()
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"unknown problem {name!r}; registered names: {', '.join(_REGISTRY)}"
        ) from None

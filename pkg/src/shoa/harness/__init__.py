from .config import AlgorithmSpec, ConfigError, ExperimentConfig, load_config, parse_config
from .report import summarize
from .runner import (
    CurveRecord,
    ResultRow,
    derive_seed,
    read_curves,
    read_results,
    run_cell,
    run_matrix,
    run_to_directory,
)

__all__ = [
    "AlgorithmSpec",
    "ConfigError",
    "ExperimentConfig",
    "load_config",
    "parse_config",
    "summarize",
    "CurveRecord",
    "ResultRow",
    "derive_seed",
    "read_curves",
    "read_results",
    "run_cell",
    "run_matrix",
    "run_to_directory",
]

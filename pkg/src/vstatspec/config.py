"""Runtime configuration: budgets, tolerances, and CLI-facing defaults.

Precedence is command-line flags > config file > the defaults below.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from .errors import InputError


@dataclass
class Config:
    # Enumeration budgets
    dense_budget: int = 10_000_000        # max dense-table entries (m^k)^r
    tuple_budget: int = 100_000_000       # max index tuples n^r for literal statistics
    composition_budget: int = 10_000_000  # max frequency-count vectors for the word oracle
    grid_budget: int = 10_000_000         # max simplex grid points resolution^(m-1)

    # Solver
    random_starts: int = 32
    solver_seed: int = 1234
    kkt_tol: float = 1e-8
    fiber_tol_bernoulli: float = 1e-8
    fiber_tol_markov: float = 1e-6

    # Sweep / discontinuity detection
    jump_gap_factor: float = 10.0         # entropy gap vs local grid modulus
    branch_split_distance: float = 0.05   # maximizer distance that separates branches

    # Oracle comparison
    oracle_check_min_n: int = 1000        # --check refuses below this word length

    # Output
    log_base: str = "e"                   # e | 2 | 10; converts printed values only
    threads: int = 1


_LOG_BASES = ("e", "2", "10")


def load_config_file(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise InputError(f"config file {path} must contain a JSON object")
    known = {f.name for f in dataclasses.fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    return data


def resolve_config(file_values: dict | None = None, overrides: dict | None = None) -> Config:
    """Merge defaults, config-file values and explicit flag overrides."""
    values: dict = {}
    for source in (file_values or {}), (overrides or {}):
        values.update({k: v for k, v in source.items() if v is not None})
    cfg = Config(**values)
    if cfg.log_base not in _LOG_BASES:
        raise InputError(f"log_base must be one of {_LOG_BASES}, got {cfg.log_base!r}")
    return cfg


def config_to_json(cfg: Config) -> str:
    return json.dumps(dataclasses.asdict(cfg), indent=2, sort_keys=True)

"""Deterministic seeded sampling helpers shared by the CLI and the tests."""

from __future__ import annotations

import numpy as np

from .field import DomainError

DEFAULT_SEED = 97531

__all__ = ["DEFAULT_SEED", "rng_from", "spawn", "log_uniform", "sample_points"]


def rng_from(seed=None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else int(seed))


def spawn(seed, stream) -> np.random.Generator:
    """Independent generator for a numbered sub-experiment of a seeded run."""
    return np.random.default_rng([int(stream), int(seed)])


def log_uniform(rng, lo, hi, size=None):
    lo, hi = float(lo), float(hi)
    if not 0.0 < lo < hi:
        raise DomainError(f"log-uniform range needs 0 < lo < hi, got ({lo}, {hi})")
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size))


def sample_points(rng, n, lo=0.1, hi=10.0) -> np.ndarray:
    """n rows of log-uniform coordinates in [lo, hi]^3."""
    return log_uniform(rng, lo, hi, (int(n), 3))

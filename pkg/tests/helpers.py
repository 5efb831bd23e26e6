"""Shared sampling helpers for the test suites."""

import numpy as np

from radiuslab.ensembles import EnsembleSpec, sample, trial_seed, trial_spec
from radiuslab.radius import SweepConfig

# Lean sweeps for bulk property trials; the default 720-point grid is used
# where the test is about sweep accuracy itself.
LEAN_SWEEP = SweepConfig(coarse_grid=128, refine_tol=1e-9)
FAST_SWEEP = SweepConfig(coarse_grid=360, refine_tol=1e-9)


def draw(kind: str, dim: int, trial: int, seed: int = 2024, slot: int = 0) -> np.ndarray:
    return sample(trial_spec(EnsembleSpec(kind, dim, seed=seed), trial, slot))


def unit_vector(n: int, trial: int, seed: int = 2024, slot: int = 9) -> np.ndarray:
    rng = np.random.default_rng(trial_seed(seed, trial, slot))
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def normal_quadrant(dim: int, trial: int, seed: int = 77) -> np.ndarray:
    """A normal matrix whose real and imaginary parts are both PSD
    (spectrum in the closed first quadrant)."""
    U = sample(trial_spec(EnsembleSpec("unitary", dim, seed=seed), trial, 0))
    rng = np.random.default_rng(trial_seed(seed, trial, 1))
    z = np.abs(rng.standard_normal(dim)) + 1j * np.abs(rng.standard_normal(dim))
    return (U * z) @ U.conj().T

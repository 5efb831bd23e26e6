"""Seeded random matrix ensembles for the operator classes under test.

Every sampler is a pure function of its spec: the same ``EnsembleSpec``
(including seed) yields a bit-identical matrix.  Per-trial streams are
derived by counter through ``trial_spec`` so that parallel sweeps stay
reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import BadSpecError
from .linalg import Matrix

KINDS = (
    "ginibre",
    "hermitian",
    "psd",
    "unitary",
    "normal",
    "accretive",
    "dissipative",
    "accretive_dissipative",
    "nilpotent_jordan",
    "diagonal",
)


@dataclass(frozen=True)
class EnsembleSpec:
    """Recipe for one random matrix: operator class, dimension, scale, seed."""

    kind: str
    dim: int
    scale: float = 1.0
    seed: int = 0


def _validate(spec: EnsembleSpec) -> None:
    if spec.kind not in KINDS:
        raise BadSpecError(f"unknown ensemble kind {spec.kind!r}; choose from {KINDS}")
    if int(spec.dim) != spec.dim or spec.dim < 1:
        raise BadSpecError(f"dim must be a positive integer, got {spec.dim}")
    if not (math.isfinite(spec.scale) and spec.scale > 0):
        raise BadSpecError(f"scale must be positive and finite, got {spec.scale}")
    if int(spec.seed) != spec.seed or spec.seed < 0:
        raise BadSpecError(f"seed must be a nonnegative integer, got {spec.seed}")


def trial_seed(seed: int, *path: int) -> int:
    """Derive a sub-seed for (trial, slot, ...) counters from a base seed."""
    ss = np.random.SeedSequence([int(seed), *[int(p) for p in path]])
    return int(ss.generate_state(1, np.uint64)[0])


def trial_spec(spec: EnsembleSpec, trial: int, slot: int = 0) -> EnsembleSpec:
    """The spec for one trial draw, with a counter-derived seed."""
    return replace(spec, seed=trial_seed(spec.seed, trial, slot))


def _complex_gaussian(rng: np.random.Generator, n: int) -> Matrix:
    """n x n matrix of i.i.d. standard complex Gaussians (unit total variance)."""
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def _haar_unitary(rng: np.random.Generator, n: int) -> Matrix:
    G = _complex_gaussian(rng, n)
    Q, R = np.linalg.qr(G)
    d = np.diagonal(R)
    ph = np.where(np.abs(d) > 0.0, d / np.abs(np.where(np.abs(d) > 0.0, d, 1.0)), 1.0)
    return Q * ph


def sample(spec: EnsembleSpec) -> Matrix:
    """Draw one matrix of the requested operator class.

    Constructions guarantee class membership up to roundoff:
    accretive = PSD + i*Hermitian, dissipative = Hermitian + i*PSD,
    accretive_dissipative = PSD + i*PSD, normal = U diag(z) U*, and PSD
    draws are ``G* G / dim`` to keep the operator norm near 1 across dims.
    """
    _validate(spec)
    n = spec.dim
    rng = np.random.default_rng(spec.seed)
    kind = spec.kind
    if kind == "ginibre":
        M = _complex_gaussian(rng, n)
    elif kind == "hermitian":
        G = _complex_gaussian(rng, n)
        M = 0.5 * (G + G.conj().T)
    elif kind == "psd":
        G = _complex_gaussian(rng, n)
        M = (G.conj().T @ G) / n
    elif kind == "unitary":
        M = _haar_unitary(rng, n)
    elif kind == "normal":
        U = _haar_unitary(rng, n)
        z = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)
        M = (U * z) @ U.conj().T
    elif kind == "accretive":
        G = _complex_gaussian(rng, n)
        H = _complex_gaussian(rng, n)
        M = (G.conj().T @ G) / n + 0.5j * (H + H.conj().T)
    elif kind == "dissipative":
        G = _complex_gaussian(rng, n)
        H = _complex_gaussian(rng, n)
        M = 0.5 * (H + H.conj().T) + 1j * (G.conj().T @ G) / n
    elif kind == "accretive_dissipative":
        G = _complex_gaussian(rng, n)
        H = _complex_gaussian(rng, n)
        M = (G.conj().T @ G) / n + 1j * (H.conj().T @ H) / n
    elif kind == "nilpotent_jordan":
        M = np.eye(n, k=1, dtype=np.complex128)
    else:  # diagonal
        z = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)
        M = np.diag(z)
    return spec.scale * M


def canonical_suite() -> list[tuple[str, Matrix]]:
    """Fixed regression matrices used across the test suites."""
    eye2 = np.eye(2, dtype=np.complex128)
    return [
        ("zero", np.zeros((2, 2), dtype=np.complex128)),
        ("identity", eye2.copy()),
        ("jordan2", np.array([[0, 1], [0, 0]], dtype=np.complex128)),
        ("shear", np.array([[1, 2], [0, 1]], dtype=np.complex128)),
        ("diag_1_i", np.diag([1.0, 1j]).astype(np.complex128)),
        ("one_plus_i_identity", (1.0 + 1j) * eye2),
    ]

"""Dense complex linear algebra for operator-inequality work.

Matrices are plain 2-d ``numpy`` arrays of ``complex128`` treated as
operators on C^n.  Spectral machinery (eigendecompositions, singular
values) goes through LAPACK via ``numpy.linalg``; matrix absolute values,
fractional powers and scalar maps are applied on the eigenbasis of the
relevant Hermitian matrix.

Tolerances are relative to the operand's operator norm with an absolute
floor of ``TOL_FLOOR``, so every test in this module is scale invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    BadExponentError,
    DimensionMismatchError,
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
)

Matrix = np.ndarray

#: Absolute floor applied to every relative tolerance.
TOL_FLOOR = 1e-12

#: Relative symmetry tolerance for "is Hermitian" preconditions.
HERMITIAN_RTOL = 1e-10

#: Eigenvalues of a nominally PSD matrix in [-PSD_CLAMP_RTOL*norm, 0) are
#: clamped to zero before fractional powers; anything more negative is an
#: error rather than roundoff.
PSD_CLAMP_RTOL = 1e-8


def as_matrix(a) -> Matrix:
    """Coerce ``a`` to a 2-d complex128 array, rejecting non-finite entries."""
    S = np.asarray(a, dtype=np.complex128)
    if S.ndim != 2:
        raise NonFiniteError(f"expected a 2-d matrix, got ndim={S.ndim}")
    if S.size == 0:
        raise NonFiniteError("empty matrix")
    if not np.all(np.isfinite(S)):
        raise NonFiniteError("matrix has NaN or infinite entries")
    return S


def as_square(a) -> Matrix:
    S = as_matrix(a)
    if S.shape[0] != S.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {S.shape}")
    return S


def _tol(norm: float, rtol: float) -> float:
    return max(rtol * norm, TOL_FLOOR)


def _hermitize(H: Matrix) -> Matrix:
    return 0.5 * (H + H.conj().T)


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
    Hermitian matrix."""

    eigenvalues: np.ndarray
    vectors: Matrix


@dataclass(frozen=True)
class MatrixClassification:
    """Operator-class flags of a square matrix, all tested against the same
    resolved absolute ``tolerance`` on eigenvalues / deviation norms."""

    is_hermitian: bool
    is_normal: bool
    is_accretive: bool
    is_dissipative: bool
    is_psd: bool
    tolerance: float


def operator_norm(S) -> float:
    """Largest singular value of ``S`` (the norm induced by the vector 2-norm)."""
    S = as_matrix(S)
    return float(np.linalg.norm(S, 2))


def hermitian_eigen(H) -> EigenDecomposition:
    """Full eigendecomposition of a Hermitian matrix.

    Raises NotHermitianError when ``||H - H*|| > 1e-10 ||H||``.
    """
    H = as_square(H)
    norm = operator_norm(H)
    dev = operator_norm(H - H.conj().T)
    if dev > _tol(norm, HERMITIAN_RTOL):
        raise NotHermitianError(f"symmetry deviation {dev:.3e} exceeds tolerance")
    w, V = np.linalg.eigh(H)
    return EigenDecomposition(eigenvalues=w, vectors=V)


def matrix_abs(S) -> Matrix:
    """The positive square root of ``S* S``.

    Accepts rectangular input; the result is square with the column
    dimension of ``S``.
    """
    S = as_matrix(S)
    gram = _hermitize(S.conj().T @ S)
    w, V = np.linalg.eigh(gram)
    root = np.sqrt(np.maximum(w, 0.0))
    return _hermitize((V * root) @ V.conj().T)


def _psd_eigen(A: Matrix, context: str) -> tuple[np.ndarray, Matrix]:
    """eigh of a PSD matrix, clamping roundoff-negative eigenvalues to zero."""
    norm = operator_norm(A)
    dev = operator_norm(A - A.conj().T)
    if dev > _tol(norm, HERMITIAN_RTOL):
        raise NotHermitianError(f"{context}: matrix is not Hermitian (deviation {dev:.3e})")
    w, V = np.linalg.eigh(A)
    if w.size and w[0] < -_tol(norm, PSD_CLAMP_RTOL):
        raise NotPSDError(f"{context}: smallest eigenvalue {w[0]:.3e} below clamp threshold")
    return np.maximum(w, 0.0), V


def psd_power(A, p: float) -> Matrix:
    """``A**p`` for PSD ``A`` and real ``p >= 0``, applied spectrally.

    Eigenvalues in ``[-1e-8 ||A||, 0)`` are clamped to zero before powering;
    anything more negative raises NotPSDError.
    """
    A = as_square(A)
    p = float(p)
    if not np.isfinite(p) or p < 0:
        raise BadExponentError(f"power must be finite and nonnegative, got {p}")
    w, V = _psd_eigen(A, "psd_power")
    return _hermitize((V * np.power(w, p)) @ V.conj().T)


def spectral_map(A, fn: Callable[[float], float]) -> Matrix:
    """Apply the scalar map ``fn`` to a Hermitian matrix on its eigenbasis."""
    A = as_square(A)
    dev = operator_norm(A - A.conj().T)
    if dev > _tol(operator_norm(A), HERMITIAN_RTOL):
        raise NotHermitianError(f"spectral_map: matrix is not Hermitian (deviation {dev:.3e})")
    w, V = np.linalg.eigh(A)
    mapped = np.array([float(fn(float(t))) for t in w])
    return _hermitize((V * mapped) @ V.conj().T)


def schatten_norm(S, p: float) -> float:
    """Schatten p-norm ``(sum sigma_i^p)^(1/p)``; ``p = inf`` is the operator norm."""
    S = as_matrix(S)
    p = float(p)
    if np.isnan(p) or p < 1:
        raise BadExponentError(f"Schatten exponent must satisfy p >= 1, got {p}")
    sv = np.linalg.svd(S, compute_uv=False)
    if np.isinf(p):
        return float(sv[0])
    smax = float(sv[0])
    if smax == 0.0:
        return 0.0
    return float(smax * np.sum((sv / smax) ** p) ** (1.0 / p))


def spectral_radius_psd_product(A, B) -> float:
    """Spectral radius of ``A B`` for PSD ``A``, ``B``.

    Computed as the top eigenvalue of the similar Hermitian matrix
    ``A^(1/2) B A^(1/2)``, which is PSD, so the result is >= 0.
    """
    A = as_square(A)
    B = as_square(B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"shape mismatch: {A.shape} vs {B.shape}")
    wa, Va = _psd_eigen(A, "spectral_radius_psd_product")
    _psd_eigen(B, "spectral_radius_psd_product")
    Ah = (Va * np.sqrt(wa)) @ Va.conj().T
    M = _hermitize(Ah @ B @ Ah)
    w = np.linalg.eigvalsh(M)
    return float(max(w[-1], 0.0))


def cartesian_decomposition(S) -> tuple[Matrix, Matrix]:
    """Split ``S`` into Hermitian parts ``(re, im)`` with ``S = re + i*im``.

    ``re = (S + S*)/2`` and ``im = (S - S*)/(2i)``; both are exactly
    Hermitian by construction.
    """
    S = as_square(S)
    Sh = S.conj().T
    return 0.5 * (S + Sh), (S - Sh) / 2j


def classify(S, tol: float = 1e-9) -> MatrixClassification:
    """Test ``S`` for the operator classes used by the inequality hypotheses.

    Eigenvalue flags use the threshold ``max(tol*||S||, TOL_FLOOR)``; the
    normality commutator is compared against ``tol*||S||^2`` (its natural
    homogeneity).
    """
    S = as_square(S)
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    norm = operator_norm(S)
    thr = _tol(norm, tol)
    re, im = cartesian_decomposition(S)
    lam_re = float(np.linalg.eigvalsh(re)[0])
    lam_im = float(np.linalg.eigvalsh(im)[0])
    is_hermitian = operator_norm(im) <= thr
    comm = S @ S.conj().T - S.conj().T @ S
    is_normal = operator_norm(comm) <= max(tol * norm * norm, TOL_FLOOR)
    is_accretive = lam_re >= -thr
    is_dissipative = lam_im >= -thr
    is_psd = is_hermitian and lam_re >= -thr
    return MatrixClassification(
        is_hermitian=is_hermitian,
        is_normal=is_normal,
        is_accretive=is_accretive,
        is_dissipative=is_dissipative,
        is_psd=is_psd,
        tolerance=thr,
    )


def off_diag_embed(S, T) -> Matrix:
    """The 2n x 2n block matrix with ``S`` upper-right, ``T*`` lower-left and
    zero diagonal blocks."""
    S = as_matrix(S)
    T = as_matrix(T)
    if S.shape != T.shape or S.shape[0] != S.shape[1]:
        raise DimensionMismatchError(
            f"operands must be square with equal shape, got {S.shape} and {T.shape}"
        )
    n = S.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    out[:n, n:] = S
    out[n:, :n] = T.conj().T
    return out

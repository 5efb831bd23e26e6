import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from helpers import draw
from radiuslab.errors import (
    BadExponentError,
    DimensionMismatchError,
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
)
from radiuslab.linalg import (
    cartesian_decomposition,
    classify,
    hermitian_eigen,
    matrix_abs,
    off_diag_embed,
    operator_norm,
    psd_power,
    schatten_norm,
    spectral_map,
    spectral_radius_psd_product,
)

I2 = np.eye(2, dtype=complex)
JORDAN2 = np.array([[0, 1], [0, 0]], dtype=complex)


# --- hermitian_eigen ---------------------------------------------------------


def test_eigen_identity():
    dec = hermitian_eigen(I2)
    assert np.allclose(dec.eigenvalues, [1.0, 1.0])
    V = dec.vectors
    assert np.allclose(V.conj().T @ V, I2, atol=1e-12)


def test_eigen_diagonal_sorted_ascending():
    dec = hermitian_eigen(np.diag([3.0, -1.0]).astype(complex))
    assert np.allclose(dec.eigenvalues, [-1.0, 3.0])


def test_eigen_pauli_x():
    # characteristic polynomial lambda^2 - 1 by hand
    dec = hermitian_eigen(np.array([[0, 1], [1, 0]], dtype=complex))
    assert np.allclose(dec.eigenvalues, [-1.0, 1.0])


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eigen(JORDAN2)


def test_eigen_rejects_non_finite():
    with pytest.raises(NonFiniteError):
        hermitian_eigen(np.array([[np.nan, 0], [0, 1]], dtype=complex))


@pytest.mark.parametrize("trial", range(12))
def test_eigen_invariants_random(trial):
    n = 2 + trial % 5
    H = draw("hermitian", n, trial)
    dec = hermitian_eigen(H)
    V, w = dec.vectors, dec.eigenvalues
    assert np.all(np.diff(w) >= 0)
    assert operator_norm(V.conj().T @ V - np.eye(n)) <= 1e-10 * n
    rebuilt = (V * w) @ V.conj().T
    assert operator_norm(rebuilt - H) <= 1e-9 * max(operator_norm(H), 1e-12)


# --- matrix_abs / psd_power / spectral_map -----------------------------------


def test_abs_identity():
    assert np.allclose(matrix_abs(I2), I2)


def test_abs_jordan2():
    assert np.allclose(matrix_abs(JORDAN2), np.diag([0.0, 1.0]))


@pytest.mark.parametrize("trial", range(6))
def test_abs_squares_to_gram(trial):
    G = draw("ginibre", 4, trial)
    M = matrix_abs(G)
    assert operator_norm(M @ M - G.conj().T @ G) <= 1e-8 * operator_norm(G) ** 2


def test_psd_power_examples():
    assert np.allclose(psd_power(I2, 0.5), I2)
    assert np.allclose(psd_power(np.diag([4.0, 9.0]).astype(complex), 0.5), np.diag([2.0, 3.0]))


@pytest.mark.parametrize("trial", range(6))
def test_psd_power_square_matches_product(trial):
    A = draw("psd", 5, trial)
    assert operator_norm(psd_power(A, 2) - A @ A) <= 1e-8 * operator_norm(A @ A)


def test_psd_power_clamps_roundoff_negatives():
    A = np.diag([1.0, -1e-10]).astype(complex)
    R = psd_power(A, 0.5)
    assert np.allclose(R, np.diag([1.0, 0.0]), atol=1e-5)


def test_psd_power_rejects_indefinite():
    with pytest.raises(NotPSDError):
        psd_power(np.diag([1.0, -0.5]).astype(complex), 0.5)
    with pytest.raises(BadExponentError):
        psd_power(I2, -1.0)


def test_spectral_map_examples():
    assert np.allclose(spectral_map(np.diag([1.0, 4.0]).astype(complex), lambda t: t * t), np.diag([1.0, 16.0]))
    H = draw("hermitian", 4, 0)
    assert np.allclose(spectral_map(H, lambda t: t), H, atol=1e-12)
    assert np.allclose(
        spectral_map(np.diag([0.25, 1.0]).astype(complex), np.sqrt), np.diag([0.5, 1.0])
    )
    with pytest.raises(NotHermitianError):
        spectral_map(JORDAN2, np.sqrt)


@pytest.mark.parametrize("trial", range(6))
def test_spectral_map_factorization(trial):
    # f(t) g(t) = t on the spectrum makes the mapped product reproduce A
    A = draw("psd", 4, trial)
    F = spectral_map(A, lambda t: t**0.75)
    G = spectral_map(A, lambda t: t**0.25)
    assert operator_norm(F @ G - A) <= 1e-8 * max(operator_norm(A), 1e-12)


# --- norms -------------------------------------------------------------------


def test_operator_norm_examples():
    assert operator_norm(JORDAN2) == pytest.approx(1.0)
    assert operator_norm(np.diag([3.0, -4.0j]).astype(complex)) == pytest.approx(4.0)


def test_schatten_examples():
    assert schatten_norm(np.eye(3, dtype=complex), 1) == pytest.approx(3.0)
    assert schatten_norm(np.diag([3.0, 4.0]).astype(complex), 2) == pytest.approx(5.0)
    S = draw("ginibre", 5, 1)
    assert schatten_norm(S, np.inf) == pytest.approx(operator_norm(S), rel=1e-12)
    with pytest.raises(BadExponentError):
        schatten_norm(S, 0.5)


@pytest.mark.parametrize("p", [1, 1.5, 2, 3, np.inf])
@pytest.mark.parametrize("trial", range(3))
def test_schatten_unitarily_invariant(p, trial):
    S = draw("ginibre", 5, trial)
    U = draw("unitary", 5, trial, slot=1)
    V = draw("unitary", 5, trial, slot=2)
    a = schatten_norm(S, p)
    b = schatten_norm(U @ S @ V, p)
    assert abs(a - b) <= 1e-9 * a


# --- spectral radius of PSD products -----------------------------------------


def _power_iteration_radius(M: np.ndarray, iters: int = 2000) -> float:
    # independent oracle on the nonsymmetric product
    rng = np.random.default_rng(5)
    v = rng.standard_normal(M.shape[0]) + 1j * rng.standard_normal(M.shape[0])
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = M @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        lam = float(np.vdot(v, M @ v).real)
    return abs(lam)


def test_spectral_radius_examples():
    assert spectral_radius_psd_product(I2, I2) == pytest.approx(1.0)
    assert spectral_radius_psd_product(
        np.diag([1.0, 2.0]).astype(complex), np.diag([3.0, 4.0]).astype(complex)
    ) == pytest.approx(8.0)


@pytest.mark.parametrize("trial", range(5))
def test_spectral_radius_matches_power_iteration(trial):
    A = draw("psd", 4, trial, slot=0)
    B = draw("psd", 4, trial, slot=1)
    r = spectral_radius_psd_product(A, B)
    assert r == pytest.approx(_power_iteration_radius(A @ B), rel=1e-6, abs=1e-10)


def test_spectral_radius_validates():
    with pytest.raises(DimensionMismatchError):
        spectral_radius_psd_product(I2, np.eye(3, dtype=complex))
    with pytest.raises(NotPSDError):
        spectral_radius_psd_product(np.diag([1.0, -1.0]).astype(complex), I2)


# --- Cartesian decomposition and classification ------------------------------


def test_cartesian_hermitian_and_skew():
    H = draw("hermitian", 4, 0)
    re, im = cartesian_decomposition(H)
    assert np.allclose(re, H) and np.allclose(im, 0)
    re, im = cartesian_decomposition(1j * H)
    assert np.allclose(re, 0, atol=1e-12) and np.allclose(im, H)


def test_cartesian_shear():
    re, im = cartesian_decomposition(np.array([[1, 2], [0, 1]], dtype=complex))
    assert np.allclose(re, np.array([[1, 1], [1, 1]]))
    assert np.allclose(im, np.array([[0, -1j], [1j, 0]]))


def test_cartesian_rejects_rectangular():
    with pytest.raises(NotSquareError):
        cartesian_decomposition(np.zeros((2, 3), dtype=complex))


def test_classify_examples():
    c = classify(I2, 1e-9)
    assert c.is_accretive and c.is_hermitian and c.is_normal and c.is_psd
    c = classify(1j * I2, 1e-9)
    assert c.is_dissipative and c.is_accretive  # Re = 0 is borderline PSD
    assert not c.is_hermitian
    c = classify(np.array([[1, 2], [0, 1]], dtype=complex), 1e-9)
    assert c.is_accretive and not c.is_dissipative and not c.is_normal


def test_off_diag_embed_examples():
    one = np.eye(1, dtype=complex)
    assert np.allclose(off_diag_embed(one, one), np.array([[0, 1], [1, 0]]))
    S = draw("ginibre", 3, 0)
    E = off_diag_embed(S, np.zeros_like(S))
    assert np.allclose(E[:3, 3:], S) and np.allclose(E[3:, :3], 0) and np.allclose(E[:3, :3], 0)
    with pytest.raises(DimensionMismatchError):
        off_diag_embed(S, np.zeros((2, 2), dtype=complex))


@pytest.mark.parametrize("trial", range(6))
def test_embed_norm_is_max_of_block_norms(trial):
    S = draw("ginibre", 4, trial, slot=0)
    T = draw("ginibre", 4, trial, slot=1)
    lhs = operator_norm(off_diag_embed(S, T))
    rhs = max(operator_norm(S), operator_norm(T))
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_embed_self_pair_is_hermitian():
    S = draw("ginibre", 3, 2)
    E = off_diag_embed(S, S)
    assert operator_norm(E - E.conj().T) <= 1e-12


# --- module-level invariants -------------------------------------------------


@pytest.mark.parametrize("trial", range(8))
def test_norm_squared_equals_gram_norm(trial):
    S = draw("ginibre", 5, trial)
    assert operator_norm(S) ** 2 == pytest.approx(operator_norm(S @ S.conj().T), rel=1e-8)


@pytest.mark.parametrize("trial", range(8))
def test_half_power_cross_norm_identity(trial):
    # || |S*|^(1/2) |S|^(1/2) ||^2 = r(|S| |S*|)
    S = draw("ginibre", 4, trial)
    a = matrix_abs(S)
    b = matrix_abs(S.conj().T)
    lhs = operator_norm(psd_power(b, 0.5) @ psd_power(a, 0.5)) ** 2
    rhs = spectral_radius_psd_product(a, b)
    assert lhs == pytest.approx(rhs, rel=1e-7, abs=1e-12)


_entry = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)


@settings(max_examples=25, deadline=None)
@given(
    re=arrays(np.float64, (4, 4), elements=_entry),
    im=arrays(np.float64, (4, 4), elements=_entry),
)
def test_cartesian_reconstructs(re, im):
    S = re + 1j * im
    a, b = cartesian_decomposition(S)
    assert operator_norm(a - a.conj().T) == 0.0
    assert operator_norm(b - b.conj().T) == 0.0
    assert np.allclose(a + 1j * b, S, atol=1e-14)


@settings(max_examples=25, deadline=None)
@given(
    re=arrays(np.float64, (3, 3), elements=_entry),
    im=arrays(np.float64, (3, 3), elements=_entry),
)
def test_abs_is_psd_and_consistent(re, im):
    S = re + 1j * im
    M = matrix_abs(S)
    w = np.linalg.eigvalsh(M)
    assert w[0] >= -1e-10 * max(operator_norm(S), 1.0)
    assert operator_norm(M @ M - S.conj().T @ S) <= 1e-8 * max(operator_norm(S) ** 2, 1e-9)

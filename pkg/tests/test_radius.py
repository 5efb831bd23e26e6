import numpy as np
import pytest

from helpers import FAST_SWEEP, LEAN_SWEEP, draw
from radiuslab.errors import BadExponentError, DimensionMismatchError
from radiuslab.linalg import cartesian_decomposition, off_diag_embed, operator_norm, schatten_norm
from radiuslab.radius import (
    SweepConfig,
    numerical_radius,
    numerical_radius_oracle,
    off_diag_numerical_radius,
    weighted_numerical_radius,
)

JORDAN2 = np.array([[0, 1], [0, 0]], dtype=complex)


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(coarse_grid=4)
    with pytest.raises(ValueError):
        SweepConfig(refine_tol=0.0)


def test_radius_identity_and_normal():
    assert numerical_radius(np.eye(3, dtype=complex)) == pytest.approx(1.0)
    S = np.diag([1.0, 1j]).astype(complex)
    # normal matrices attain w(S) = ||S||
    assert numerical_radius(S) == pytest.approx(operator_norm(S), rel=1e-10)


def test_radius_jordan2_is_half():
    # the ascent oracle attains 1/2 at x = (1, 1)/sqrt(2)
    x = np.array([1.0, 1.0]) / np.sqrt(2)
    assert abs(np.vdot(x, JORDAN2 @ x)) == pytest.approx(0.5)
    assert numerical_radius(JORDAN2) == pytest.approx(0.5, abs=1e-10)


def test_radius_zero_matrix():
    assert numerical_radius(np.zeros((3, 3), dtype=complex)) == 0.0
    assert numerical_radius_oracle(np.zeros((3, 3), dtype=complex)) == 0.0


def test_oracle_identity_from_any_start():
    for seed in range(4):
        assert numerical_radius_oracle(np.eye(4, dtype=complex), restarts=1, seed=seed) == pytest.approx(1.0)


def test_oracle_requires_restarts():
    with pytest.raises(ValueError):
        numerical_radius_oracle(JORDAN2, restarts=0)


@pytest.mark.parametrize("trial", range(10))
def test_oracle_cross_validates_sweep(trial):
    S = draw("ginibre", 6, trial)
    nm = operator_norm(S)
    w_sweep = numerical_radius(S)
    w_oracle = numerical_radius_oracle(S, restarts=32, seed=trial)
    assert abs(w_sweep - w_oracle) <= 1e-6 * nm
    # the sweep is an upper-envelope method, the oracle a lower bound
    assert w_sweep >= w_oracle - 1e-6 * nm


@pytest.mark.parametrize("trial", range(10))
def test_equivalence_envelope(trial):
    S = draw("ginibre", 5, trial)
    nm = operator_norm(S)
    w = numerical_radius(S)
    eps = 1e-7 * nm
    assert 0.5 * nm - eps <= w <= nm + eps


@pytest.mark.parametrize("trial", range(6))
def test_hermitian_part_facts(trial):
    S = draw("ginibre", 4, trial)
    re, im = cartesian_decomposition(S)
    w = numerical_radius(S, FAST_SWEEP)
    eps = 1e-7 * operator_norm(S)
    assert numerical_radius(re, FAST_SWEEP) == pytest.approx(operator_norm(re), rel=1e-9)
    assert operator_norm(re) <= w + eps
    assert operator_norm(im) <= w + eps


@pytest.mark.parametrize("trial", range(6))
def test_rotation_and_unitary_invariance(trial):
    S = draw("ginibre", 4, trial)
    w = numerical_radius(S)
    rng = np.random.default_rng(trial)
    phi = rng.uniform(0, 2 * np.pi)
    assert numerical_radius(np.exp(1j * phi) * S) == pytest.approx(w, rel=1e-9)
    U = draw("unitary", 4, trial, slot=3)
    assert numerical_radius(U.conj().T @ S @ U) == pytest.approx(w, rel=1e-8)


@pytest.mark.parametrize("trial", range(6))
def test_rotated_curve_is_lipschitz(trial):
    S = draw("ginibre", 4, trial)
    nm = operator_norm(S)
    rng = np.random.default_rng(100 + trial)

    def f(theta):
        H = 0.5 * (np.exp(1j * theta) * S + np.exp(-1j * theta) * S.conj().T)
        return float(np.linalg.eigvalsh(H)[-1])

    for _ in range(20):
        t1, t2 = rng.uniform(0, 2 * np.pi, size=2)
        assert abs(f(t1) - f(t2)) <= nm * abs(t1 - t2) + 1e-12


# --- off-diagonal embedding radius -------------------------------------------


def test_off_diag_spec_cases():
    assert off_diag_numerical_radius(np.eye(2, dtype=complex), np.eye(2, dtype=complex)) == pytest.approx(1.0)
    S = draw("ginibre", 3, 0)
    # with T = 0 the sup is constant ||S||
    assert off_diag_numerical_radius(S, np.zeros_like(S)) == pytest.approx(0.5 * operator_norm(S), rel=1e-12)
    with pytest.raises(DimensionMismatchError):
        off_diag_numerical_radius(S, np.zeros((2, 2), dtype=complex))


@pytest.mark.parametrize("trial", range(6))
def test_off_diag_adjoint_pair_gives_radius(trial):
    # w([[O, S], [S, O]]) = w(S), realized by the pair (S, S*)
    S = draw("ginibre", 4, trial)
    lhs = off_diag_numerical_radius(S, S.conj().T)
    assert lhs == pytest.approx(numerical_radius(S), rel=1e-7)


@pytest.mark.parametrize("trial", range(6))
def test_off_diag_matches_embedded_radius(trial):
    S = draw("ginibre", 3, trial, slot=0)
    T = draw("ginibre", 3, trial, slot=1)
    a = off_diag_numerical_radius(S, T)
    b = numerical_radius(off_diag_embed(S, T))
    assert a == pytest.approx(b, rel=1e-7)


# --- norm-valued radius -------------------------------------------------------


def test_weighted_examples():
    n = 4
    assert weighted_numerical_radius(np.eye(n, dtype=complex), 1) == pytest.approx(float(n))
    S = draw("ginibre", 4, 3)
    assert weighted_numerical_radius(S, np.inf) == pytest.approx(numerical_radius(S), rel=1e-7)
    assert weighted_numerical_radius(np.diag([1.0, -1.0]).astype(complex), 2) == pytest.approx(np.sqrt(2.0), rel=1e-10)
    with pytest.raises(BadExponentError):
        weighted_numerical_radius(S, 0.9)


@pytest.mark.parametrize("p", [1, 2])
@pytest.mark.parametrize("trial", range(4))
def test_weighted_dominates_real_part_norm(p, trial):
    # theta = 0 is one admissible rotation
    S = draw("ginibre", 4, trial)
    re, _ = cartesian_decomposition(S)
    assert weighted_numerical_radius(S, p, LEAN_SWEEP) >= schatten_norm(re, p) - 1e-9

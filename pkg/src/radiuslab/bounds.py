"""Catalog of evaluable numerical-radius and operator-norm inequalities.

Every bound evaluates to a :class:`BoundReport` carrying both sides of the
inequality, the signed slack (normalized so ``slack >= 0`` means the bound
holds), the natural homogeneity scale, and the named intermediate
quantities of the statement.  Bounds with operator-class hypotheses
(accretive, dissipative, normal) never raise on out-of-class inputs; they
return ``applicable=False`` with a reason so ensemble sweeps can tally
applicable trials.

:class:`Operand` and :class:`Pair` cache the spectral objects that the
formulas keep reusing (polar factors, fractional powers, radii); every
public bound function accepts either raw matrices or these wrappers, so
harness code can evaluate many bounds per sample without recomputing
sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BadExponentError,
    DimensionMismatchError,
    FGProductViolationError,
    RadiusLabError,
    UnknownBoundError,
    UnknownLemmaError,
)
from .linalg import (
    TOL_FLOOR,
    Matrix,
    as_matrix,
    as_square,
    cartesian_decomposition,
    classify,
    matrix_abs,
    off_diag_embed,
    operator_norm,
    psd_power,
    schatten_norm,
    spectral_radius_psd_product,
)
from .radius import (
    DEFAULT_SWEEP,
    SweepConfig,
    numerical_radius,
    off_diag_numerical_radius,
    weighted_numerical_radius,
)

#: Default relative slack tolerance: a bound "holds" when
#: slack >= -DEFAULT_TOL_REL * scale.
DEFAULT_TOL_REL = 1e-7

#: Classification tolerance used by hypothesis gates; matches the fidelity
#: guaranteed by the ensembles.
GATE_TOL = 1e-9

_SQRT3_OVER_3 = math.sqrt(3.0) / 3.0
_SQRT2_OVER_2 = math.sqrt(2.0) / 2.0


@dataclass(frozen=True)
class BoundReport:
    """One inequality evaluation.

    ``slack`` is ``rhs - lhs`` for one-sided bounds and ``-|rhs - lhs|``
    for equality checks, so nonnegative slack always means "holds".
    Inapplicable reports carry zeros and ``holds=True`` (vacuous); they are
    excluded from pass/fail tallies by the harness.
    """

    bound_id: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    scale: float
    details: dict
    applicable: bool = True
    reason: str | None = None

    @property
    def rel_slack(self) -> float:
        return self.slack / max(self.scale, TOL_FLOOR)

    def as_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "scale": self.scale,
            "details": {k: float(v) for k, v in sorted(self.details.items())},
            "applicable": self.applicable,
            "reason": self.reason,
        }


def _finalize(
    bound_id: str,
    lhs: float,
    rhs: float,
    scale: float,
    details: dict,
    tol_rel: float,
    equality: bool = False,
) -> BoundReport:
    lhs, rhs, scale = float(lhs), float(rhs), float(scale)
    slack = -abs(rhs - lhs) if equality else rhs - lhs
    holds = slack >= -max(tol_rel * scale, TOL_FLOOR)
    return BoundReport(
        bound_id=bound_id,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        holds=holds,
        scale=scale,
        details={k: float(v) for k, v in details.items()},
    )


def _inapplicable(bound_id: str, scale: float, reason: str, details: dict | None = None) -> BoundReport:
    return BoundReport(
        bound_id=bound_id,
        lhs=0.0,
        rhs=0.0,
        slack=0.0,
        holds=True,
        scale=float(scale),
        details={k: float(v) for k, v in (details or {}).items()},
        applicable=False,
        reason=reason,
    )


def _hermitize(M: Matrix) -> Matrix:
    return 0.5 * (M + M.conj().T)


def _fmt_param(v: float) -> str:
    v = float(v)
    if math.isinf(v):
        return "inf"
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


class Operand:
    """A square matrix plus lazily cached spectral data.

    The polar factor caches share one eigendecomposition of ``S* S`` (and
    one of ``S S*``), so ``|S|``, ``|S|^(1/2)`` and all other fractional
    powers are mutually consistent to machine precision.
    """

    def __init__(self, S, sweep: SweepConfig = DEFAULT_SWEEP):
        self.matrix = as_square(S)
        self.sweep = sweep
        self._abs_powers: dict[float, Matrix] = {}
        self._adj_powers: dict[float, Matrix] = {}
        self._weighted: dict[float, float] = {}

    @cached_property
    def n(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def norm(self) -> float:
        return operator_norm(self.matrix)

    @cached_property
    def _cartesian(self) -> tuple[Matrix, Matrix]:
        return cartesian_decomposition(self.matrix)

    @property
    def re(self) -> Matrix:
        return self._cartesian[0]

    @property
    def im(self) -> Matrix:
        return self._cartesian[1]

    @cached_property
    def re_norm(self) -> float:
        return operator_norm(self.re)

    @cached_property
    def im_norm(self) -> float:
        return operator_norm(self.im)

    @cached_property
    def re_abs(self) -> Matrix:
        return matrix_abs(self.re)

    @cached_property
    def im_abs(self) -> Matrix:
        return matrix_abs(self.im)

    @cached_property
    def _gram_eig(self) -> tuple[np.ndarray, Matrix]:
        S = self.matrix
        w, V = np.linalg.eigh(_hermitize(S.conj().T @ S))
        return np.sqrt(np.maximum(w, 0.0)), V

    @cached_property
    def _cogram_eig(self) -> tuple[np.ndarray, Matrix]:
        S = self.matrix
        w, V = np.linalg.eigh(_hermitize(S @ S.conj().T))
        return np.sqrt(np.maximum(w, 0.0)), V

    @cached_property
    def singular_values(self) -> np.ndarray:
        """Singular values, ascending (= spectrum of |S| and of |S*|)."""
        return self._gram_eig[0]

    def abs_power(self, q: float) -> Matrix:
        """``|S|^q`` on the shared eigenbasis of ``S* S``."""
        q = float(q)
        if q not in self._abs_powers:
            sig, V = self._gram_eig
            self._abs_powers[q] = _hermitize((V * np.power(sig, q)) @ V.conj().T)
        return self._abs_powers[q]

    def adj_power(self, q: float) -> Matrix:
        """``|S*|^q`` on the shared eigenbasis of ``S S*``."""
        q = float(q)
        if q not in self._adj_powers:
            sig, V = self._cogram_eig
            self._adj_powers[q] = _hermitize((V * np.power(sig, q)) @ V.conj().T)
        return self._adj_powers[q]

    @property
    def abs_value(self) -> Matrix:
        return self.abs_power(1.0)

    @property
    def abs_sqrt(self) -> Matrix:
        return self.abs_power(0.5)

    @property
    def adj_value(self) -> Matrix:
        return self.adj_power(1.0)

    @property
    def adj_sqrt(self) -> Matrix:
        return self.adj_power(0.5)

    def map_abs(self, fn: Callable[[float], float]) -> Matrix:
        """Apply a scalar map to ``|S|`` spectrally."""
        sig, V = self._gram_eig
        vals = np.array([float(fn(float(t))) for t in sig])
        return _hermitize((V * vals) @ V.conj().T)

    def map_adj(self, fn: Callable[[float], float]) -> Matrix:
        sig, V = self._cogram_eig
        vals = np.array([float(fn(float(t))) for t in sig])
        return _hermitize((V * vals) @ V.conj().T)

    @cached_property
    def omega(self) -> float:
        return numerical_radius(self.matrix, self.sweep)

    def omega_weighted(self, p: float) -> float:
        p = float(p)
        if p not in self._weighted:
            self._weighted[p] = weighted_numerical_radius(self.matrix, p, self.sweep)
        return self._weighted[p]

    @cached_property
    def s2_norm(self) -> float:
        return operator_norm(self.matrix @ self.matrix)

    @cached_property
    def ss_adjoint(self) -> Matrix:
        return self.matrix @ self.matrix.conj().T

    @cached_property
    def gram_sum_norm(self) -> float:
        S = self.matrix
        return operator_norm(S.conj().T @ S + S @ S.conj().T)

    @cached_property
    def abs_cross_radius(self) -> float:
        """Spectral radius of ``|S| |S*|``."""
        W = _hermitize(self.abs_sqrt @ self.adj_value @ self.abs_sqrt)
        w = np.linalg.eigvalsh(W)
        return float(max(w[-1], 0.0))

    @cached_property
    def abs_product_omega(self) -> float:
        """Numerical radius of the generally non-Hermitian product ``|S| |S*|``."""
        return numerical_radius(self.abs_value @ self.adj_value, self.sweep)

    @cached_property
    def classification(self):
        return classify(self.matrix, GATE_TOL)


class Pair:
    """Two same-dimension operands plus cached pair-level quantities."""

    def __init__(self, s: Operand, t: Operand):
        if s.matrix.shape != t.matrix.shape:
            raise DimensionMismatchError(
                f"pair shape mismatch: {s.matrix.shape} vs {t.matrix.shape}"
            )
        self.s = s
        self.t = t
        self.sweep = s.sweep

    @cached_property
    def embed_radius(self) -> float:
        """w([[O, S], [T*, O]]) via the rotation-sup identity."""
        return off_diag_numerical_radius(self.s.matrix, self.t.matrix, self.sweep)

    @cached_property
    def product_radius(self) -> float:
        return numerical_radius(self.s.matrix @ self.t.matrix, self.sweep)

    @cached_property
    def scale(self) -> float:
        return max(self.s.norm, self.t.norm)


def _operand(S, sweep: SweepConfig) -> Operand:
    return S if isinstance(S, Operand) else Operand(S, sweep)


def _pair(S, T, sweep: SweepConfig) -> Pair:
    if isinstance(S, Pair):
        return S
    return Pair(_operand(S, sweep), _operand(T, sweep))


def _gate_reason(cls, need: str) -> str | None:
    """None when the hypothesis holds, otherwise a human-readable reason."""
    if need == "accretive_or_dissipative":
        if cls.is_accretive or cls.is_dissipative:
            return None
        return "matrix is neither accretive nor dissipative"
    if need == "accretive_and_dissipative":
        if cls.is_accretive and cls.is_dissipative:
            return None
        return "matrix is not accretive-dissipative"
    raise ValueError(need)


# ---------------------------------------------------------------------------
# Universal bounds (no operator-class hypothesis)
# ---------------------------------------------------------------------------


def bound_equiv(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL):
    """The two-sided norm equivalence ``||S||/2 <= w(S) <= ||S||``."""
    op = _operand(S, sweep)
    details = {"operator_norm": op.norm, "numerical_radius": op.omega}
    lower = _finalize("equiv_lower", 0.5 * op.norm, op.omega, op.norm, details, tol_rel)
    upper = _finalize("equiv_upper", op.omega, op.norm, op.norm, details, tol_rel)
    return lower, upper


def bound_kittaneh(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(S) <= (||S|| + ||S^2||^(1/2)) / 2``."""
    op = _operand(S, sweep)
    s2_sqrt = math.sqrt(op.s2_norm)
    rhs = 0.5 * (op.norm + s2_sqrt)
    return _finalize(
        "kittaneh03", op.omega, rhs, op.norm, {"s2_norm_sqrt": s2_sqrt}, tol_rel
    )


def bound_bp(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(S) <= (||S|| + sqrt(r(|S| |S*|))) / 2``.

    The spectral-radius term never exceeds ``||S^2||^(1/2)``, so this
    tightens the Kittaneh bound; both values land in ``details``.
    """
    op = _operand(S, sweep)
    sqrt_r = math.sqrt(op.abs_cross_radius)
    s2_sqrt = math.sqrt(op.s2_norm)
    rhs = 0.5 * (op.norm + sqrt_r)
    details = {
        "sqrt_spectral_radius": sqrt_r,
        "s2_norm_sqrt": s2_sqrt,
        "improves_kittaneh": 1.0 if sqrt_r <= s2_sqrt + max(tol_rel * op.norm, TOL_FLOOR) else 0.0,
    }
    return _finalize("bp_spectral", op.omega, rhs, op.norm, details, tol_rel)


def bound_heydarbeygi(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(S)^2 <= ||S*S + SS*||/4 + w(|S| |S*|)/2``.

    The product ``|S| |S*|`` is generally non-Hermitian; its radius goes
    through the full rotation sweep.
    """
    op = _operand(S, sweep)
    rhs = 0.25 * op.gram_sum_norm + 0.5 * op.abs_product_omega
    details = {
        "gram_sum_norm": op.gram_sum_norm,
        "abs_product_omega": op.abs_product_omega,
    }
    return _finalize("heydarbeygi", op.omega**2, rhs, op.norm**2, details, tol_rel)


def _check_fg_pair(f, g, spectrum: np.ndarray) -> None:
    for lam in spectrum:
        lam = float(lam)
        fv, gv = float(f(lam)), float(g(lam))
        if fv < -1e-12 or gv < -1e-12:
            raise FGProductViolationError(f"f or g negative at t={lam}")
        if abs(fv * gv - lam) > 1e-8 * (1.0 + abs(lam)):
            raise FGProductViolationError(
                f"f(t)g(t) != t at t={lam}: got {fv * gv}"
            )


def bound_fg(
    S,
    f: Callable[[float], float],
    g: Callable[[float], float],
    *,
    sweep: SweepConfig = DEFAULT_SWEEP,
    tol_rel: float = DEFAULT_TOL_REL,
    label: str = "fg_general",
) -> BoundReport:
    """``w(S)^2 <= ||Re(f^4(|S|) + g^4(|S*|) + 2 f^2(|S|) g^2(|S*|))|| / 4``
    for nonnegative scalar maps with ``f(t) g(t) = t`` on the spectrum."""
    op = _operand(S, sweep)
    _check_fg_pair(f, g, op.singular_values)
    F2 = op.map_abs(lambda t: f(t) ** 2)
    F4 = op.map_abs(lambda t: f(t) ** 4)
    G2 = op.map_adj(lambda t: g(t) ** 2)
    G4 = op.map_adj(lambda t: g(t) ** 4)
    X = F4 + G4 + 2.0 * (F2 @ G2)
    re_norm = operator_norm(_hermitize(X))
    rhs = 0.25 * re_norm
    return _finalize(label, op.omega**2, rhs, op.norm**2, {"re_sum_norm": re_norm}, tol_rel)


def bound_power_mean(S, t: float, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(S)^2 <= ||Re(|S|^{4(1-t)} + |S*|^{4t} + 2 |S|^{2(1-t)} |S*|^{2t})|| / 4``
    for ``t`` in [0, 1]; ``t = 1/2`` is the power-mean refinement whose
    constant 1/4 is attained by normal matrices."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise BadExponentError(f"power-mean parameter must be in [0, 1], got {t}")
    op = _operand(S, sweep)
    X = (
        op.abs_power(4.0 * (1.0 - t))
        + op.adj_power(4.0 * t)
        + 2.0 * (op.abs_power(2.0 * (1.0 - t)) @ op.adj_power(2.0 * t))
    )
    re_norm = operator_norm(_hermitize(X))
    rhs = 0.25 * re_norm
    return _finalize(
        f"power_mean@t={_fmt_param(t)}",
        op.omega**2,
        rhs,
        op.norm**2,
        {"re_sum_norm": re_norm},
        tol_rel,
    )


def _psd_root(W: Matrix) -> Matrix:
    """Square root of a PSD-by-construction Hermitian matrix (clamped)."""
    w, V = np.linalg.eigh(_hermitize(W))
    return _hermitize((V * np.sqrt(np.maximum(w, 0.0))) @ V.conj().T)


def _corner_term(abs_x: Matrix, sqrt_x: Matrix, abs_y: Matrix) -> float:
    """``|| |X| + (|X|^(1/2) |Y| |X|^(1/2))^(1/2) ||``."""
    root = _psd_root(sqrt_x @ abs_y @ sqrt_x)
    return operator_norm(abs_x + root)


def bound_thm24(S, T=None, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w([[O, S], [T*, O]]) <= max(alpha, beta) / 2`` with the four corner
    norms built from the polar factors of ``S`` and ``T``."""
    pr = _pair(S, T, sweep)
    s, t = pr.s, pr.t
    alpha = max(
        _corner_term(s.adj_value, s.adj_sqrt, t.adj_value),
        _corner_term(s.abs_value, s.abs_sqrt, t.abs_value),
    )
    beta = max(
        _corner_term(t.adj_value, t.adj_sqrt, s.adj_value),
        _corner_term(t.abs_value, t.abs_sqrt, s.abs_value),
    )
    rhs = 0.5 * max(alpha, beta)
    return _finalize(
        "thm24", pr.embed_radius, rhs, pr.scale, {"alpha": alpha, "beta": beta}, tol_rel
    )


def bound_cor10(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(S) <= max(...) / 2`` (the off-diagonal bound at ``T* = S``), which
    in turn never exceeds the spectral-radius bound; the chain value lands
    in ``details``."""
    op = _operand(S, sweep)
    corner = max(
        _corner_term(op.adj_value, op.adj_sqrt, op.abs_value),
        _corner_term(op.abs_value, op.abs_sqrt, op.adj_value),
    )
    rhs = 0.5 * corner
    eq9_rhs = 0.5 * (op.norm + math.sqrt(op.abs_cross_radius))
    details = {
        "corner_max": corner,
        "bp_rhs": eq9_rhs,
        "chain_ok": 1.0 if rhs <= eq9_rhs + max(tol_rel * op.norm, TOL_FLOOR) else 0.0,
    }
    return _finalize("cor10", op.omega, rhs, op.norm, details, tol_rel)


def bound_prop4(S, T=None, r: float = 2.0, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w^r([[O, S], [T*, O]]) <= max(lambda, mu) / 2`` with r/2-powers of
    the symmetrized cross terms; ``r = 1`` reproduces the corner bound."""
    r = float(r)
    if not (math.isfinite(r) and r >= 1.0):
        raise BadExponentError(f"exponent must satisfy r >= 1, got {r}")
    pr = _pair(S, T, sweep)
    s, t = pr.s, pr.t

    def term(abs_xr: Matrix, sqrt_x: Matrix, abs_y: Matrix) -> float:
        W = _hermitize(sqrt_x @ abs_y @ sqrt_x)
        return operator_norm(abs_xr + psd_power(W, r / 2.0))

    lam = max(
        term(s.adj_power(r), s.adj_sqrt, t.adj_value),
        term(s.abs_power(r), s.abs_sqrt, t.abs_value),
    )
    mu = max(
        term(t.adj_power(r), t.adj_sqrt, s.adj_value),
        term(t.abs_power(r), t.abs_sqrt, s.abs_value),
    )
    rhs = 0.5 * max(lam, mu)
    return _finalize(
        f"prop4@r={_fmt_param(r)}",
        pr.embed_radius**r,
        rhs,
        pr.scale**r,
        {"lambda": lam, "mu": mu},
        tol_rel,
    )


def bound_thm5(S, T=None, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w^2([[O, S], [T*, O]]) <= max(delta, xi) / 2`` with spectral radii of
    ``|X| (|X| + |Y|)`` products."""
    pr = _pair(S, T, sweep)
    s, t = pr.s, pr.t
    delta = max(
        spectral_radius_psd_product(s.adj_value, s.adj_value + t.adj_value),
        spectral_radius_psd_product(s.abs_value, s.abs_value + t.abs_value),
    )
    xi = max(
        spectral_radius_psd_product(t.adj_value, t.adj_value + s.adj_value),
        spectral_radius_psd_product(t.abs_value, t.abs_value + s.abs_value),
    )
    rhs = 0.5 * max(delta, xi)
    return _finalize(
        "thm5", pr.embed_radius**2, rhs, pr.scale**2, {"delta": delta, "xi": xi}, tol_rel
    )


def bound_eq16(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(S)^2 <= max(r(|S*|(|S*| + |S|)), r(|S|(|S*| + |S|))) / 2``; the
    constant 1/2 is attained by normal matrices."""
    op = _operand(S, sweep)
    abs_sum = op.adj_value + op.abs_value
    r_adj = spectral_radius_psd_product(op.adj_value, abs_sum)
    r_abs = spectral_radius_psd_product(op.abs_value, abs_sum)
    rhs = 0.5 * max(r_adj, r_abs)
    return _finalize(
        "eq16", op.omega**2, rhs, op.norm**2, {"radius_adj": r_adj, "radius_abs": r_abs}, tol_rel
    )


def bound_normal_prop(A, B=None, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """For normal ``A``, ``B``:
    ``w([[O, A], [B*, O]]) <= max(|| |A| + | |B|^(1/2) |A|^(1/2) | ||, ...) / 2``.

    Inputs failing the normality gate yield an inapplicable report rather
    than an exception.
    """
    pr = _pair(A, B, sweep)
    a, b = pr.s, pr.t
    if not a.classification.is_normal or not b.classification.is_normal:
        return _inapplicable("normal_prop", pr.scale, "both operands must be normal")
    term_ab = operator_norm(a.abs_value + matrix_abs(b.abs_sqrt @ a.abs_sqrt))
    term_ba = operator_norm(b.abs_value + matrix_abs(a.abs_sqrt @ b.abs_sqrt))
    rhs = 0.5 * max(term_ab, term_ba)
    return _finalize(
        "normal_prop", pr.embed_radius, rhs, pr.scale, {"term_ab": term_ab, "term_ba": term_ba}, tol_rel
    )


def bound_thm6(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``||S|| <= w(S) + sqrt(r(|Re S| |Im S|))`` (a lower bound on the radius
    in operator-norm form)."""
    op = _operand(S, sweep)
    cross = spectral_radius_psd_product(op.re_abs, op.im_abs)
    rhs = op.omega + math.sqrt(cross)
    return _finalize(
        "thm6", op.norm, rhs, op.norm, {"omega": op.omega, "cross_radius": cross}, tol_rel
    )


# ---------------------------------------------------------------------------
# Hypothesis-gated bounds (accretive / dissipative classes)
# ---------------------------------------------------------------------------


def bound_thm8(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``(sqrt(3)/3) ||S|| <= w(S)`` for accretive or dissipative ``S``."""
    op = _operand(S, sweep)
    reason = _gate_reason(op.classification, "accretive_or_dissipative")
    if reason is not None:
        return _inapplicable("thm8", op.norm, reason)
    return _finalize(
        "thm8",
        _SQRT3_OVER_3 * op.norm,
        op.omega,
        op.norm,
        {"operator_norm": op.norm, "numerical_radius": op.omega},
        tol_rel,
    )


def bound_ms(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``(sqrt(2)/2) ||S|| <= w(S)`` for accretive-dissipative ``S``."""
    op = _operand(S, sweep)
    reason = _gate_reason(op.classification, "accretive_and_dissipative")
    if reason is not None:
        return _inapplicable("ms_acc_dis", op.norm, reason)
    return _finalize(
        "ms_acc_dis",
        _SQRT2_OVER_2 * op.norm,
        op.omega,
        op.norm,
        {"operator_norm": op.norm, "numerical_radius": op.omega},
        tol_rel,
    )


def bound_product(S, T=None, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``w(ST) <= 3 w(S) w(T)`` when each factor is accretive or dissipative.

    Outside those cases the universal factor-4 baseline is reported with
    ``applicable=False``.
    """
    pr = _pair(S, T, sweep)
    cs, ct = pr.s.classification, pr.t.classification
    if cs.is_accretive and ct.is_accretive:
        case = 1
    elif cs.is_dissipative and ct.is_dissipative:
        case = 2
    elif (cs.is_accretive and ct.is_dissipative) or (cs.is_dissipative and ct.is_accretive):
        case = 3
    else:
        case = 0
    ws, wt = pr.s.omega, pr.t.omega
    rhs3, rhs4 = 3.0 * ws * wt, 4.0 * ws * wt
    details = {
        "case": float(case),
        "rhs_factor3": rhs3,
        "rhs_factor4": rhs4,
        "omega_s": ws,
        "omega_t": wt,
    }
    scale = pr.s.norm * pr.t.norm
    report = _finalize("product3", pr.product_radius, rhs3 if case else rhs4, scale, details, tol_rel)
    if case:
        return report
    return BoundReport(
        bound_id=report.bound_id,
        lhs=report.lhs,
        rhs=report.rhs,
        slack=report.slack,
        holds=report.holds,
        scale=report.scale,
        details=report.details,
        applicable=False,
        reason="no accretive/dissipative case applies; factor-4 baseline reported",
    )


def bound_eq18(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``||S||^2 <= ||SS* + S*S||/2 + ||Re S|| ||Im S||`` for accretive or
    dissipative ``S``."""
    op = _operand(S, sweep)
    reason = _gate_reason(op.classification, "accretive_or_dissipative")
    if reason is not None:
        return _inapplicable("eq18", op.norm**2, reason)
    rhs = 0.5 * op.gram_sum_norm + op.re_norm * op.im_norm
    details = {"gram_sum_norm": op.gram_sum_norm, "re_norm": op.re_norm, "im_norm": op.im_norm}
    return _finalize("eq18", op.norm**2, rhs, op.norm**2, details, tol_rel)


def bound_eq19(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``||S||^2 - ||S^2|| <= 2 ||Re S|| ||Im S||`` for accretive or
    dissipative ``S``.

    The difference is mathematically nonnegative; roundoff down to
    ``-1e-9 ||S||^2`` is clamped, anything more negative is an internal
    consistency error.
    """
    op = _operand(S, sweep)
    reason = _gate_reason(op.classification, "accretive_or_dissipative")
    if reason is not None:
        return _inapplicable("eq19", op.norm**2, reason)
    raw = op.norm**2 - op.s2_norm
    if raw < -1e-9 * op.norm**2:
        raise RadiusLabError(f"||S||^2 - ||S^2|| = {raw:.3e} is negative beyond roundoff")
    lhs = max(raw, 0.0)
    rhs = 2.0 * op.re_norm * op.im_norm
    details = {"s2_norm": op.s2_norm, "re_norm": op.re_norm, "im_norm": op.im_norm}
    return _finalize("eq19", lhs, rhs, op.norm**2, details, tol_rel)


def bound_remark_min(S, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``||S||^2 <= ||Re S|| ||Im S|| + min(||Re S|| ||Im S|| + ||S^2||,
    ||SS* + S*S||/2)`` under the same gate as the two bounds it merges."""
    op = _operand(S, sweep)
    reason = _gate_reason(op.classification, "accretive_or_dissipative")
    if reason is not None:
        return _inapplicable("remark_min", op.norm**2, reason)
    cross = op.re_norm * op.im_norm
    branch_a = cross + op.s2_norm
    branch_b = 0.5 * op.gram_sum_norm
    rhs = cross + min(branch_a, branch_b)
    details = {"branch_eq19": branch_a, "branch_eq18": branch_b, "cross_term": cross}
    return _finalize("remark_min", op.norm**2, rhs, op.norm**2, details, tol_rel)


def bound_thm25(S, p: float = 2.0, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``|||SS*||| <= |||(Re S)^2 + (Im S)^2||| + ||Re S|| |||Im S|||`` for
    accretive ``S`` (the dissipative variant swaps the roles); when both
    hypotheses hold the accretive form is primary and the other lands in
    ``details``."""
    op = _operand(S, sweep)
    bound_id = f"thm25@p={_fmt_param(float(p))}"
    cls = op.classification
    reason = _gate_reason(cls, "accretive_or_dissipative")
    if reason is not None:
        return _inapplicable(bound_id, op.norm**2, reason)
    core = schatten_norm(op.re @ op.re + op.im @ op.im, p)
    acc_rhs = core + op.re_norm * schatten_norm(op.im, p)
    dis_rhs = core + op.im_norm * schatten_norm(op.re, p)
    lhs = schatten_norm(op.ss_adjoint, p)
    details = {"core_norm": core}
    if cls.is_accretive:
        rhs = acc_rhs
        details["variant"] = 1.0
        if cls.is_dissipative:
            details["dissipative_rhs"] = dis_rhs
    else:
        rhs = dis_rhs
        details["variant"] = 2.0
    return _finalize(bound_id, lhs, rhs, op.norm**2, details, tol_rel)


def bound_final_thm(S, p: float = 2.0, *, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """``|||SS*||| <= w_nrm(S) (2 w_nrm(S) + w(S))`` for accretive or
    dissipative ``S``, where ``w_nrm`` is the norm-valued radius for the
    same Schatten norm."""
    op = _operand(S, sweep)
    bound_id = f"final_thm@p={_fmt_param(float(p))}"
    reason = _gate_reason(op.classification, "accretive_or_dissipative")
    if reason is not None:
        return _inapplicable(bound_id, op.norm**2, reason)
    wom = op.omega_weighted(p)
    lhs = schatten_norm(op.ss_adjoint, p)
    rhs = wom * (2.0 * wom + op.omega)
    details = {"omega_weighted": wom, "omega": op.omega}
    return _finalize(bound_id, lhs, rhs, op.norm**2, details, tol_rel)


# ---------------------------------------------------------------------------
# Preliminary lemma suite
# ---------------------------------------------------------------------------


def _lemma_k1(A, B, sweep, tol_rel):
    a, b = _operand(A, sweep), _operand(B, sweep)
    scale = max(a.norm, b.norm)
    if not (a.classification.is_psd and b.classification.is_psd):
        return _inapplicable("k1", scale, "both operands must be PSD")
    sa, sb = a.abs_sqrt, b.abs_sqrt
    term_ab = operator_norm(a.matrix + matrix_abs(sb @ sa))
    term_ba = operator_norm(b.matrix + matrix_abs(sa @ sb))
    lhs = operator_norm(a.matrix + b.matrix)
    return _finalize("k1", lhs, max(term_ab, term_ba), scale, {"term_ab": term_ab, "term_ba": term_ba}, tol_rel)


def _lemma_2(A, B, sweep, tol_rel):
    a, b = _operand(A, sweep), _operand(B, sweep)
    scale = max(a.norm, b.norm)
    ca, cb = a.classification, b.classification
    if not ((ca.is_hermitian and cb.is_hermitian) or (ca.is_normal and cb.is_normal)):
        return _inapplicable("lem2", scale, "operands must both be Hermitian or both normal")
    lhs = operator_norm(a.matrix + b.matrix)
    rhs = operator_norm(a.abs_value + b.abs_value)
    return _finalize("lem2", lhs, rhs, scale, {"abs_sum_norm": rhs}, tol_rel)


def _lemma_3(A, B, sweep, tol_rel):
    a, b = _operand(A, sweep), _operand(B, sweep)
    pr = Pair(a, b)
    lhs = pr.embed_radius
    rhs = numerical_radius(off_diag_embed(a.matrix, b.matrix), sweep)
    return _finalize(
        "lem3", lhs, rhs, pr.scale, {"sweep_value": lhs, "embed_radius": rhs}, tol_rel, equality=True
    )


def _lemma_14(S, T, sweep, tol_rel):
    s, t = _operand(S, sweep), _operand(T, sweep)
    scale = s.norm * t.norm
    if not (s.classification.is_psd or t.classification.is_psd):
        return _inapplicable("lem14", scale, "one operand must be PSD")
    lhs = operator_norm(s.matrix @ t.matrix - t.matrix @ s.matrix)
    return _finalize("lem14", lhs, scale, scale, {"commutator_norm": lhs}, tol_rel)


def _lemma_17(A, B, sweep, tol_rel):
    a, b = _operand(A, sweep), _operand(B, sweep)
    scale = max(a.norm, b.norm)
    if not (a.classification.is_psd and b.classification.is_psd):
        return _inapplicable("lem17", scale, "both operands must be PSD")
    cross = operator_norm(a.abs_sqrt @ b.abs_sqrt)
    lhs = max(a.norm, b.norm) - cross
    rhs = operator_norm(a.matrix - b.matrix)
    return _finalize("lem17", lhs, rhs, scale, {"cross_norm": cross}, tol_rel)


def _lemma_22(A, B, sweep, tol_rel, p=2.0):
    a, b = _operand(A, sweep), _operand(B, sweep)
    bound_id = f"lem22@p={_fmt_param(float(p))}"
    scale = a.norm * schatten_norm(b.matrix, p)
    cls = a.classification
    if not (cls.is_normal and cls.is_accretive and cls.is_dissipative):
        return _inapplicable(bound_id, scale, "first operand must be normal with PSD real and imaginary parts")
    lhs = schatten_norm(a.matrix @ b.matrix - b.matrix @ a.matrix, p)
    coef = math.hypot(a.re_norm, a.im_norm)
    rhs = coef * schatten_norm(b.matrix, p)
    return _finalize(bound_id, lhs, rhs, scale, {"coefficient": coef}, tol_rel)


def _lemma_27(A, x, y, sweep, tol_rel, f=None, g=None):
    op = _operand(A, sweep)
    f = f if f is not None else math.sqrt
    g = g if g is not None else math.sqrt
    _check_fg_pair(f, g, op.singular_values)
    x = np.asarray(x, dtype=np.complex128).reshape(-1)
    y = np.asarray(y, dtype=np.complex128).reshape(-1)
    if x.shape[0] != op.n or y.shape[0] != op.n:
        raise DimensionMismatchError("vector length does not match matrix dimension")
    F2 = op.map_abs(lambda t: f(t) ** 2)
    G2 = op.map_adj(lambda t: g(t) ** 2)
    qx = max(float(np.vdot(x, F2 @ x).real), 0.0)
    qy = max(float(np.vdot(y, G2 @ y).real), 0.0)
    qx_adj = max(float(np.vdot(x, G2 @ x).real), 0.0)
    lhs = abs(complex(np.vdot(y, op.matrix @ x)))
    rhs = math.sqrt(qx * qy)
    printed_rhs = math.sqrt(qx * qx_adj)
    scale = op.norm * float(np.linalg.norm(x)) * float(np.linalg.norm(y))
    details = {
        "printed_rhs": printed_rhs,
        "printed_holds": 1.0 if lhs <= printed_rhs + max(tol_rel * scale, TOL_FLOOR) else 0.0,
    }
    return _finalize("lem27", lhs, rhs, scale, details, tol_rel)


def _lemma_28(A, x, sweep, tol_rel, r=2.0):
    r = float(r)
    if not (math.isfinite(r) and r >= 1.0):
        raise BadExponentError(f"exponent must satisfy r >= 1, got {r}")
    op = _operand(A, sweep)
    bound_id = f"lem28@r={_fmt_param(r)}"
    if not op.classification.is_psd:
        return _inapplicable(bound_id, op.norm**r, "operand must be PSD")
    x = np.asarray(x, dtype=np.complex128).reshape(-1)
    if x.shape[0] != op.n:
        raise DimensionMismatchError("vector length does not match matrix dimension")
    nx = float(np.linalg.norm(x))
    if nx == 0.0:
        raise ValueError("zero vector")
    x = x / nx
    q = max(float(np.vdot(x, op.matrix @ x).real), 0.0)
    lhs = q**r
    rhs = float(np.vdot(x, op.abs_power(r) @ x).real)
    return _finalize(bound_id, lhs, rhs, op.norm**r, {"quadratic_form": q}, tol_rel)


def _lemma_eq21(S, sweep, tol_rel):
    op = _operand(S, sweep)
    lhs = max(op.re_norm, op.im_norm)
    return _finalize(
        "eq21", lhs, op.omega, op.norm, {"re_norm": op.re_norm, "im_norm": op.im_norm}, tol_rel
    )


def _lemma_as(A, B, sweep, tol_rel, r=2.0):
    r = float(r)
    if not (math.isfinite(r) and r >= 1.0):
        raise BadExponentError(f"exponent must satisfy r >= 1, got {r}")
    a, b = _operand(A, sweep), _operand(B, sweep)
    bound_id = f"as_ineq@r={_fmt_param(r)}"
    scale = max(a.norm, b.norm) ** r
    if not (a.classification.is_psd and b.classification.is_psd):
        return _inapplicable(bound_id, scale, "both operands must be PSD")
    lhs = operator_norm(psd_power(0.5 * (a.matrix + b.matrix), r))
    rhs = operator_norm(0.5 * (a.abs_power(r) + b.abs_power(r)))
    return _finalize(bound_id, lhs, rhs, scale, {}, tol_rel)


def _lemma_pomoc(X, Y, sweep, tol_rel):
    x, y = _operand(X, sweep), _operand(Y, sweep)
    lhs = operator_norm(off_diag_embed(x.matrix, y.matrix.conj().T))
    rhs = max(x.norm, y.norm)
    return _finalize(
        "pomoc", lhs, rhs, rhs, {"norm_x": x.norm, "norm_y": y.norm}, tol_rel, equality=True
    )


_LEMMAS: dict[str, tuple[Callable, int, int]] = {
    # lemma_id -> (function, matrix arity, vector arity)
    "k1": (_lemma_k1, 2, 0),
    "lem2": (_lemma_2, 2, 0),
    "lem3": (_lemma_3, 2, 0),
    "lem14": (_lemma_14, 2, 0),
    "lem17": (_lemma_17, 2, 0),
    "lem22": (_lemma_22, 2, 0),
    "lem27": (_lemma_27, 1, 2),
    "lem28": (_lemma_28, 1, 1),
    "eq21": (_lemma_eq21, 1, 0),
    "as_ineq": (_lemma_as, 2, 0),
    "pomoc": (_lemma_pomoc, 2, 0),
}


def check_lemma(lemma_id: str, *inputs, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL, **params) -> BoundReport:
    """Evaluate one of the preliminary facts by identifier.

    Positional ``inputs`` are the matrices followed by any vectors the
    lemma needs (lem27: A, x, y; lem28: A, x).  Keyword ``params`` carry
    exponents (``r``, ``p``) or scalar maps (``f``, ``g``).
    """
    if lemma_id not in _LEMMAS:
        raise UnknownLemmaError(f"unknown lemma id {lemma_id!r}; known: {sorted(_LEMMAS)}")
    fn, mats, vecs = _LEMMAS[lemma_id]
    if len(inputs) != mats + vecs:
        raise TypeError(f"lemma {lemma_id} takes {mats + vecs} inputs, got {len(inputs)}")
    return fn(*inputs, sweep=sweep, tol_rel=tol_rel, **params)


# ---------------------------------------------------------------------------
# Registry consumed by the harness and CLI
# ---------------------------------------------------------------------------


@dataclass
class TrialInputs:
    """Everything one verification trial may consume."""

    s: Operand
    t: Operand | None = None
    x: np.ndarray | None = None
    y: np.ndarray | None = None
    _pair: Pair | None = field(default=None, repr=False)

    @property
    def pair(self) -> Pair:
        if self._pair is None:
            if self.t is None:
                raise DimensionMismatchError("trial has no second operand")
            self._pair = Pair(self.s, self.t)
        return self._pair


@dataclass(frozen=True)
class CatalogEntry:
    """CLI-facing description of one bound: input arity, default params,
    comparison key, and the evaluator."""

    bound_id: str
    arity: int
    vectors: int
    quantity: str | None
    defaults: dict
    run: Callable[[TrialInputs, dict, SweepConfig, float], BoundReport]


def _power_maps(a: float):
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise BadExponentError(f"map exponent must be in [0, 1], got {a}")
    return (lambda t: t**a), (lambda t: t ** (1.0 - a))


CATALOG: dict[str, CatalogEntry] = {}


def _register(bound_id, arity, vectors, quantity, defaults, run):
    CATALOG[bound_id] = CatalogEntry(bound_id, arity, vectors, quantity, defaults, run)


_register("equiv_lower", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_equiv(ti.s, sweep=sw, tol_rel=tol)[0])
_register("equiv_upper", 1, 0, "omega", {},
          lambda ti, prm, sw, tol: bound_equiv(ti.s, sweep=sw, tol_rel=tol)[1])
_register("kittaneh03", 1, 0, "omega", {},
          lambda ti, prm, sw, tol: bound_kittaneh(ti.s, sweep=sw, tol_rel=tol))
_register("bp_spectral", 1, 0, "omega", {},
          lambda ti, prm, sw, tol: bound_bp(ti.s, sweep=sw, tol_rel=tol))
_register("heydarbeygi", 1, 0, "omega_sq", {},
          lambda ti, prm, sw, tol: bound_heydarbeygi(ti.s, sweep=sw, tol_rel=tol))


def _run_fg(ti, prm, sw, tol):
    f, g = _power_maps(prm["a"])
    return bound_fg(ti.s, f, g, sweep=sw, tol_rel=tol,
                    label=f"fg_general@a={_fmt_param(prm['a'])}")


_register("fg_general", 1, 0, "omega_sq", {"a": 0.75}, _run_fg)
_register("power_mean", 1, 0, "omega_sq", {"t": 0.5},
          lambda ti, prm, sw, tol: bound_power_mean(ti.s, prm["t"], sweep=sw, tol_rel=tol))
_register("thm24", 2, 0, None, {},
          lambda ti, prm, sw, tol: bound_thm24(ti.pair, sweep=sw, tol_rel=tol))
_register("cor10", 1, 0, "omega", {},
          lambda ti, prm, sw, tol: bound_cor10(ti.s, sweep=sw, tol_rel=tol))
_register("prop4", 2, 0, None, {"r": 2.0},
          lambda ti, prm, sw, tol: bound_prop4(ti.pair, r=prm["r"], sweep=sw, tol_rel=tol))
_register("thm5", 2, 0, None, {},
          lambda ti, prm, sw, tol: bound_thm5(ti.pair, sweep=sw, tol_rel=tol))
_register("eq16", 1, 0, "omega_sq", {},
          lambda ti, prm, sw, tol: bound_eq16(ti.s, sweep=sw, tol_rel=tol))
_register("normal_prop", 2, 0, None, {},
          lambda ti, prm, sw, tol: bound_normal_prop(ti.pair, sweep=sw, tol_rel=tol))
_register("thm6", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_thm6(ti.s, sweep=sw, tol_rel=tol))
_register("thm8", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_thm8(ti.s, sweep=sw, tol_rel=tol))
_register("ms_acc_dis", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_ms(ti.s, sweep=sw, tol_rel=tol))
_register("product3", 2, 0, None, {},
          lambda ti, prm, sw, tol: bound_product(ti.pair, sweep=sw, tol_rel=tol))
_register("eq18", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_eq18(ti.s, sweep=sw, tol_rel=tol))
_register("eq19", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_eq19(ti.s, sweep=sw, tol_rel=tol))
_register("remark_min", 1, 0, None, {},
          lambda ti, prm, sw, tol: bound_remark_min(ti.s, sweep=sw, tol_rel=tol))
_register("thm25", 1, 0, None, {"p": 2.0},
          lambda ti, prm, sw, tol: bound_thm25(ti.s, p=prm["p"], sweep=sw, tol_rel=tol))
_register("final_thm", 1, 0, None, {"p": 2.0},
          lambda ti, prm, sw, tol: bound_final_thm(ti.s, p=prm["p"], sweep=sw, tol_rel=tol))

_register("k1", 2, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("k1", ti.s, ti.t, sweep=sw, tol_rel=tol))
_register("lem2", 2, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("lem2", ti.s, ti.t, sweep=sw, tol_rel=tol))
_register("lem3", 2, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("lem3", ti.s, ti.t, sweep=sw, tol_rel=tol))
_register("lem14", 2, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("lem14", ti.s, ti.t, sweep=sw, tol_rel=tol))
_register("lem17", 2, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("lem17", ti.s, ti.t, sweep=sw, tol_rel=tol))
_register("lem22", 2, 0, None, {"p": 2.0},
          lambda ti, prm, sw, tol: check_lemma("lem22", ti.s, ti.t, sweep=sw, tol_rel=tol, p=prm["p"]))


def _run_lem27(ti, prm, sw, tol):
    f, g = _power_maps(prm["a"])
    return check_lemma("lem27", ti.s, ti.x, ti.y, sweep=sw, tol_rel=tol, f=f, g=g)


_register("lem27", 1, 2, None, {"a": 0.5}, _run_lem27)
_register("lem28", 1, 1, None, {"r": 2.0},
          lambda ti, prm, sw, tol: check_lemma("lem28", ti.s, ti.x, sweep=sw, tol_rel=tol, r=prm["r"]))
_register("eq21", 1, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("eq21", ti.s, sweep=sw, tol_rel=tol))
_register("as_ineq", 2, 0, None, {"r": 2.0},
          lambda ti, prm, sw, tol: check_lemma("as_ineq", ti.s, ti.t, sweep=sw, tol_rel=tol, r=prm["r"]))
_register("pomoc", 2, 0, None, {},
          lambda ti, prm, sw, tol: check_lemma("pomoc", ti.s, ti.t, sweep=sw, tol_rel=tol))


def catalog_ids() -> list[str]:
    return sorted(CATALOG)


def parse_bound_spec(spec: str) -> tuple[CatalogEntry, dict, str]:
    """Resolve ``"id"`` or ``"id@key=value,..."`` against the catalog.

    Returns the entry, the merged parameter dict, and the canonical
    identifier (parameters always spelled out when the bound has any).
    """
    base, _, tail = spec.partition("@")
    base = base.strip()
    if base not in CATALOG:
        raise UnknownBoundError(f"unknown bound id {base!r}; known: {catalog_ids()}")
    entry = CATALOG[base]
    params = dict(entry.defaults)
    if tail:
        for piece in tail.split(","):
            key, eq, val = piece.partition("=")
            key = key.strip()
            if not eq or key not in entry.defaults:
                raise UnknownBoundError(f"bound {base!r} does not take parameter {piece!r}")
            val = val.strip()
            params[key] = math.inf if val in ("inf", "Infinity") else float(val)
    if params:
        canonical = base + "@" + ",".join(f"{k}={_fmt_param(v)}" for k, v in sorted(params.items()))
    else:
        canonical = base
    return entry, params, canonical


def evaluate_bound(spec: str, inputs: TrialInputs, sweep: SweepConfig = DEFAULT_SWEEP, tol_rel: float = DEFAULT_TOL_REL) -> BoundReport:
    """Evaluate a bound identifier (with optional parameters) on prepared inputs."""
    entry, params, _ = parse_bound_spec(spec)
    return entry.run(inputs, params, sweep, tol_rel)

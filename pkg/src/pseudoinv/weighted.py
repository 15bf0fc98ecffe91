"""Weighted generalized inverses and weighted Schatten least squares."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .inverses import moore_penrose
from .linalg import (
    DEFAULT_TOL,
    LinalgError,
    ShapeError,
    Subspace,
    TolerancePolicy,
    adj,
    as_matrix,
    predicates,
    product,
    psd_sqrt,
    range_projector,
    rel_residual,
    schatten_norm,
    subspace_relate,
)


class HypothesisError(LinalgError):
    """An operation was called outside the hypotheses it is defined under."""

    def __init__(self, hypothesis: str):
        super().__init__(f"hypothesis not satisfied: {hypothesis}")
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class Weight:
    """A positive semidefinite weight operator."""

    m: np.ndarray

    @classmethod
    def of(cls, m, tol: TolerancePolicy | None = None) -> "Weight":
        if isinstance(m, Weight):
            return m
        a = as_matrix(m)
        if a.shape[0] != a.shape[1] or not predicates(a, tol).psd:
            raise LinalgError("weight must be a square positive semidefinite matrix")
        return cls(a)


@dataclass(frozen=True)
class WeightedInverseCheck:
    holds: bool
    residuals: tuple[float, float, float, float]


def is_mn_weighted_gen_inverse(t, x, m, n, tol: TolerancePolicy | None = None) -> WeightedInverseCheck:
    """Test ``TXT=T``, ``XTX=X``, ``(MTX)*=MTX``, ``(NXT)*=NXT``."""
    tol = tol or DEFAULT_TOL
    t, x = as_matrix(t), as_matrix(x)
    mw, nw = Weight.of(m, tol).m, Weight.of(n, tol).m
    if x.shape != (t.shape[1], t.shape[0]):
        raise ShapeError(f"X must be {t.shape[::-1]}, got {x.shape}")
    if mw.shape[0] != t.shape[0] or nw.shape[0] != t.shape[1]:
        raise ShapeError("weights do not compose with T")
    mtx, nxt = mw @ t @ x, nw @ x @ t
    res = (
        rel_residual(t @ x @ t, t),
        rel_residual(x @ t @ x, x),
        rel_residual(mtx, adj(mtx)),
        rel_residual(nxt, adj(nxt)),
    )
    return WeightedInverseCheck(all(r <= tol.eq_rel for r in res), res)


@dataclass(frozen=True)
class MInverseSolution:
    """All ``M``-inverses of ``T``: ``canonical + Z`` with ``R(Z) ⊆ span(kernel_basis)``."""

    canonical: np.ndarray
    kernel_basis: Subspace
    t: np.ndarray
    weight: Weight

    def member(self, coeffs) -> np.ndarray:
        """``X₀ + K C`` for a coefficient matrix ``C`` (``dim kernel × cols``)."""
        c = np.asarray(coeffs, dtype=complex).reshape(self.kernel_basis.dim, -1)
        return self.canonical + self.kernel_basis.basis @ c


def _normal_equation(t, mw):
    return adj(t) @ mw @ t, adj(t) @ mw


def m_inverse(t, m, tol: TolerancePolicy | None = None) -> MInverseSolution:
    """Solve ``T*MT X = T*M``; the canonical solution is ``(T*MT)† T*M``."""
    tol = tol or DEFAULT_TOL
    t = as_matrix(t)
    w = Weight.of(m, tol)
    if w.m.shape[0] != t.shape[0]:
        raise ShapeError("weight does not compose with T")
    lhs, rhs = _normal_equation(t, w.m)
    return MInverseSolution(
        canonical=moore_penrose(lhs, tol) @ rhs,
        kernel_basis=Subspace.null_of(lhs, tol),
        t=t,
        weight=w,
    )


def m_inverse_residual(t, x, m, tol: TolerancePolicy | None = None) -> float:
    t, x = as_matrix(t), as_matrix(x)
    w = Weight.of(m, tol)
    if x.shape != (t.shape[1], t.shape[0]) or w.m.shape[0] != t.shape[0]:
        raise ShapeError("T, X and M do not compose")
    lhs, rhs = _normal_equation(t, w.m)
    return rel_residual(lhs @ x, rhs)


def m_inverse_membership(t, x, m, tol: TolerancePolicy | None = None) -> bool:
    """Whether ``X`` is an ``M``-inverse of ``T`` (``T*MTX = T*M``)."""
    tol = tol or DEFAULT_TOL
    return m_inverse_residual(t, x, m, tol) <= tol.eq_rel


@dataclass(frozen=True)
class LsqCheck:
    value_at_candidate: float
    min_probe_value: float
    p2_oracle_value: float | None
    passes: bool
    candidate_is_weighted_inverse: bool
    objective_scale: float = 0.0

    @property
    def oracle_gap(self) -> float | None:
        """``|value − oracle|`` relative to the objective at ``Y = 0``."""
        if self.p2_oracle_value is None:
            return None
        return abs(self.value_at_candidate - self.p2_oracle_value) / (1.0 + self.objective_scale)


def _check_pw_hypotheses(a, b, w, tol):
    pa = predicates(a, tol)
    if not pa.hermitian:
        raise HypothesisError("A Hermitian")
    pw = predicates(w, tol)
    if not pw.psd:
        raise HypothesisError("W positive semidefinite")
    lam = np.linalg.eigvalsh(0.5 * (w + adj(w)))
    if lam[0] <= tol.rank_factor(w.shape) * max(lam[-1], 0.0):
        raise HypothesisError("W injective")
    if not predicates(w @ a, tol).psd:
        raise HypothesisError("WA positive semidefinite")
    if not predicates(b, tol).hermitian:
        raise HypothesisError("B Hermitian")
    if not subspace_relate(b, a, tol).a_in_b:
        raise HypothesisError("R(B) ⊆ R(A)")


def lsq_candidate_value(a, b, w, p: float, tol: TolerancePolicy | None = None) -> float:
    """``‖AB(B†A†) − P_A‖_{p,WA}``."""
    tol = tol or DEFAULT_TOL
    a, b, w = as_matrix(a), as_matrix(b), as_matrix(w)
    s = psd_sqrt(w @ a, tol)
    x0 = moore_penrose(b, tol) @ moore_penrose(a, tol)
    return schatten_norm(s @ (a @ b @ x0 - range_projector(a, tol)), p)


def lsq_p2_minimum(a, b, w, tol: TolerancePolicy | None = None) -> float:
    """Closed-form ``min_Y ‖ABY − P_A‖_{2,WA} = ‖(I − P_{SAB}) S P_A‖_F``, ``S = (WA)^{1/2}``."""
    tol = tol or DEFAULT_TOL
    a, b, w = as_matrix(a), as_matrix(b), as_matrix(w)
    s = psd_sqrt(w @ a, tol)
    sab = product(s, a, b, tol=tol)
    n = a.shape[0]
    return float(np.linalg.norm((np.eye(n) - range_projector(sab, tol)) @ s @ range_projector(a, tol)))


def weighted_lsq_check(a, b, w, p: float, n_probes: int = 200, seed: int = 0,
                       tol: TolerancePolicy | None = None) -> LsqCheck:
    """Compare ``B†A†`` against random probes for ``min_Y ‖ABY − P_A‖_{p,WA}``.

    Comparisons are relative to ``‖S P_A‖_p``, the objective at ``Y = 0``;
    with ``W = q(A)`` the weight can be badly conditioned and both values
    may be roundoff-sized.

    Half of the probes are independent Gaussian draws scaled like the
    candidate, half are perturbations of the candidate at log-uniform
    step sizes.  Each probe has its own RNG stream derived from
    ``(seed, probe index)``.
    """
    tol = tol or DEFAULT_TOL
    a, b = as_matrix(a), as_matrix(b)
    w = Weight.of(w, tol).m
    _check_pw_hypotheses(a, b, w, tol)
    s = psd_sqrt(w @ a, tol)
    pa = range_projector(a, tol)
    ab = a @ b
    x0 = moore_penrose(b, tol) @ moore_penrose(a, tol)

    def objective(y):
        return schatten_norm(s @ (ab @ y - pa), p)

    value = objective(x0)
    scale = schatten_norm(s @ pa, p)
    slack = tol.eq_rel * (1.0 + scale)
    step = max(1.0, float(np.linalg.norm(x0)))
    n = a.shape[0]
    best = np.inf
    for k in range(n_probes):
        rng = np.random.default_rng([seed, k])
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        z /= np.linalg.norm(z)
        if k % 2 == 0:
            y = step * z
        else:
            y = x0 + step * 10.0 ** rng.uniform(-3, 0) * z
        best = min(best, objective(y))
    oracle = lsq_p2_minimum(a, b, w, tol) if p == 2 else None
    passes = value <= best + slack
    if oracle is not None:
        passes = passes and abs(value - oracle) <= slack
    weighted_inv = m_inverse_membership(ab, x0, w @ a, tol)
    return LsqCheck(value, float(best), oracle, bool(passes), weighted_inv, float(scale))

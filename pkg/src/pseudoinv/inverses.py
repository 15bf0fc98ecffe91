"""Moore-Penrose, group and Douglas reduced inverses, and Penrose-class tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    LinalgError,
    ShapeError,
    TolerancePolicy,
    adj,
    as_matrix,
    fro,
    range_projector,
    rel_residual,
    subspace_relate,
    svd,
    _numeric_rank,
)


class UnsolvableEquationError(LinalgError):
    def __init__(self, residual: float):
        super().__init__(
            f"AX = B has no solution: R(B) is not inside R(A) "
            f"(‖(I-P_A)B‖_F = {residual:.3e})"
        )
        self.residual = residual


def _square(t: np.ndarray) -> None:
    if t.shape[0] != t.shape[1]:
        raise ShapeError(f"square matrix required, got {t.shape}")


def moore_penrose(t, tol: TolerancePolicy | None = None) -> np.ndarray:
    """``T† = V_r diag(1/σ) U_r*`` from the rank-truncated SVD."""
    tol = tol or DEFAULT_TOL
    a = as_matrix(t)
    u, s, v = svd(a)
    r = _numeric_rank(s, a.shape, tol)
    return (v[:, :r] / s[:r]) @ adj(u[:, :r])


pinv = moore_penrose


@dataclass(frozen=True)
class PenroseClass:
    """Which of the four Penrose equations ``X`` satisfies for ``T``.

    Residuals are ``‖lhs − rhs‖_F / (1 + ‖lhs‖_F + ‖rhs‖_F)`` for
    ``TXT = T``, ``XTX = X``, ``(TX)* = TX``, ``(XT)* = XT``.
    """

    satisfied: frozenset[int]
    residuals: tuple[float, float, float, float]

    def contains(self, *eqs: int) -> bool:
        return set(eqs) <= self.satisfied

    def to_json(self) -> dict:
        return {"satisfied": sorted(self.satisfied), "residuals": list(self.residuals)}


def penrose_class(t, x, tol: TolerancePolicy | None = None) -> PenroseClass:
    tol = tol or DEFAULT_TOL
    t, x = as_matrix(t), as_matrix(x)
    if x.shape != (t.shape[1], t.shape[0]):
        raise ShapeError(f"X must be {t.shape[::-1]} to pair with T {t.shape}, got {x.shape}")
    tx, xt = t @ x, x @ t
    res = (
        rel_residual(tx @ t, t),
        rel_residual(xt @ x, x),
        rel_residual(tx, adj(tx)),
        rel_residual(xt, adj(xt)),
    )
    sat = frozenset(k + 1 for k, r in enumerate(res) if r <= tol.eq_rel)
    return PenroseClass(sat, res)


# principal-angle cosines below this are roundoff: SVD perturbs singular
# subspaces of a unit-scale problem by a few hundred eps at worst
_COSINE_FLOOR = 1e-13


def group_inverse(t, tol: TolerancePolicy | None = None) -> np.ndarray | None:
    """Group inverse ``T#`` or ``None`` when it does not exist.

    Uses the full-rank factorisation ``T = F G`` (``F = U_r Σ_r``,
    ``G = V_r*``): ``T#`` exists iff ``GF`` is invertible, and then
    ``T# = F (GF)^{-2} G``.
    """
    tol = tol or DEFAULT_TOL
    a = as_matrix(t)
    _square(a)
    u, s, v = svd(a)
    r = _numeric_rank(s, a.shape, tol)
    if r == 0:
        return np.zeros_like(a)
    f = u[:, :r] * s[:r]
    g = adj(v[:, :r])
    gf = g @ f
    # GF = (V_r* U_r) Σ_r; V_r* U_r holds the cosines of the principal angles
    # between R(T*) and R(T).  Its natural scale is 1, so the cutoff is
    # absolute rather than relative to its own largest singular value.
    cosines = np.linalg.svd(g @ u[:, :r], compute_uv=False)
    if cosines[-1] <= max(tol.rank_factor(a.shape), _COSINE_FLOOR):
        return None
    gf_inv = np.linalg.inv(gf)
    return f @ gf_inv @ gf_inv @ g


def is_ep(t, tol: TolerancePolicy | None = None) -> bool:
    """Whether R(T) = R(T*)."""
    tol = tol or DEFAULT_TOL
    a = as_matrix(t)
    _square(a)
    return rel_residual(range_projector(a, tol), range_projector(adj(a), tol)) <= tol.eq_rel


def douglas_reduced_solution(a, b, tol: TolerancePolicy | None = None) -> np.ndarray:
    """The solution ``X_r = A† B`` of ``AX = B`` with ``R(X_r) ⊆ N(A)⊥``."""
    tol = tol or DEFAULT_TOL
    a, b = as_matrix(a), as_matrix(b)
    rel = subspace_relate(b, a, tol)
    if not rel.a_in_b:
        residual = fro(b - range_projector(a, tol) @ b)
        raise UnsolvableEquationError(residual)
    return moore_penrose(a, tol) @ b


@dataclass(frozen=True)
class InversePackage:
    t: np.ndarray
    mp: np.ndarray
    group: np.ndarray | None
    ep: bool
    p_range: np.ndarray
    p_corange: np.ndarray

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        return {
            "t": to_jsonable(self.t),
            "mp": to_jsonable(self.mp),
            "group": None if self.group is None else to_jsonable(self.group),
            "ep": self.ep,
            "p_range": to_jsonable(self.p_range),
            "p_corange": to_jsonable(self.p_corange),
        }


def inverse_package(t, tol: TolerancePolicy | None = None) -> InversePackage:
    tol = tol or DEFAULT_TOL
    a = as_matrix(t)
    square = a.shape[0] == a.shape[1]
    return InversePackage(
        t=a,
        mp=moore_penrose(a, tol),
        group=group_inverse(a, tol) if square else None,
        ep=is_ep(a, tol) if square else False,
        p_range=range_projector(a, tol),
        p_corange=range_projector(adj(a), tol),
    )

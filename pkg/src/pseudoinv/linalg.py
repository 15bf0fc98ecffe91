"""Dense complex matrix kernel.

Every operator is a 2-D ``complex128`` numpy array.  Rank, range and
equality decisions all go through a :class:`TolerancePolicy` so that no
routine hardcodes a cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

EPS = np.finfo(np.float64).eps


class LinalgError(ValueError):
    """Base class for domain errors raised by this package."""


class SVDError(LinalgError):
    def __init__(self, matrix: np.ndarray, cause: Exception):
        super().__init__(f"SVD did not converge for {matrix.shape} input: {cause}")
        self.matrix = matrix


class ComplementarityError(LinalgError):
    def __init__(self, dim_intersection: int, dim_sum: int, ambient: int):
        super().__init__(
            f"subspaces are not complementary in C^{ambient}: "
            f"dim(S∩T)={dim_intersection}, dim(S+T)={dim_sum}"
        )
        self.dim_intersection = dim_intersection
        self.dim_sum = dim_sum


class ShapeError(LinalgError):
    pass


@dataclass(frozen=True)
class TolerancePolicy:
    """Numeric cutoffs for rank, equality and positivity decisions.

    ``rank_rel=None`` means ``max(rows, cols) * eps`` of whichever matrix
    is being ranked.
    """

    rank_rel: float | None = None
    eq_rel: float = 1e-10
    psd_rel: float = 1e-10

    def __post_init__(self):
        for name in ("eq_rel", "psd_rel"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if self.rank_rel is not None and not self.rank_rel > 0:
            raise ValueError("rank_rel must be > 0")

    def rank_factor(self, shape: tuple[int, ...]) -> float:
        if self.rank_rel is not None:
            return self.rank_rel
        return max(max(shape), 1) * EPS

    def with_overrides(self, **kw) -> "TolerancePolicy":
        values = {k: v for k, v in kw.items() if v is not None}
        return TolerancePolicy(
            rank_rel=values.get("rank_rel", self.rank_rel),
            eq_rel=values.get("eq_rel", self.eq_rel),
            psd_rel=values.get("psd_rel", self.psd_rel),
        )


DEFAULT_TOL = TolerancePolicy()


def _tol(tol: TolerancePolicy | None) -> TolerancePolicy:
    return DEFAULT_TOL if tol is None else tol


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite 2-D complex array (a copy is made only if needed)."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise LinalgError("matrix has non-finite entries")
    return a


def adj(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def fro(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def rel_residual(x: np.ndarray, y: np.ndarray) -> float:
    """``‖X−Y‖_F / (1 + ‖X‖_F + ‖Y‖_F)``, the package-wide equality measure."""
    return fro(x - y) / (1.0 + fro(x) + fro(y))


def is_equal(x, y, tol: TolerancePolicy | None = None) -> bool:
    return rel_residual(as_matrix(x), as_matrix(y)) <= _tol(tol).eq_rel


def is_marginal(residual: float, threshold: float) -> bool:
    """True when ``residual`` sits within a decade either side of ``threshold``."""
    return 0.1 * threshold <= residual <= 10.0 * threshold


def svd(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD ``M = U diag(sigma) V*`` with ``V`` returned (not ``V*``)."""
    a = as_matrix(m)
    if a.size == 0:
        k = min(a.shape)
        return (np.zeros((a.shape[0], k), complex), np.zeros(k),
                np.zeros((a.shape[1], k), complex))
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise SVDError(a, exc) from exc
    return u, s, adj(vh)


def _numeric_rank(s: np.ndarray, shape, tol: TolerancePolicy) -> int:
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_factor(shape) * s[0]))


def denoise(m, scale: float, tol: TolerancePolicy | None = None) -> np.ndarray:
    """Drop singular values at or below the rank cutoff measured against ``scale``.

    A matrix computed from inputs of norm ``scale`` (a difference, a product)
    carries roundoff of order eps*scale.  Where the exact result has a
    nullspace, that noise shows up as tiny singular values which a cutoff
    relative to the result's own largest singular value would count as
    rank.
    """
    a = as_matrix(m)
    if a.size == 0:
        return a
    u, s, v = svd(a)
    cutoff = _tol(tol).rank_factor(a.shape) * max(float(s[0]), float(scale))
    r = int(np.count_nonzero(s > cutoff))
    if r == min(a.shape):
        return a
    return (u[:, :r] * s[:r]) @ adj(v[:, :r])


def _norm2(m: np.ndarray) -> float:
    return float(np.linalg.norm(m, 2)) if m.size else 0.0


def difference(x, y, tol: TolerancePolicy | None = None) -> np.ndarray:
    """``x − y`` with roundoff-level singular values removed."""
    x, y = as_matrix(x), as_matrix(y)
    return denoise(x - y, max(_norm2(x), _norm2(y)), tol)


def product(*ms, tol: TolerancePolicy | None = None) -> np.ndarray:
    """Matrix product with roundoff-level singular values removed."""
    mats = [as_matrix(m) for m in ms]
    out = mats[0]
    scale = _norm2(mats[0])
    for m in mats[1:]:
        out = out @ m
        scale *= _norm2(m)
    return denoise(out, scale, tol)


def rank(m, tol: TolerancePolicy | None = None) -> int:
    a = as_matrix(m)
    _, s, _ = svd(a)
    return _numeric_rank(s, a.shape, _tol(tol))


def rank_is_marginal(m, tol: TolerancePolicy | None = None) -> bool:
    """Whether some singular value lies within a decade of the rank cutoff."""
    a = as_matrix(m)
    _, s, _ = svd(a)
    if s.size == 0 or s[0] == 0.0:
        return False
    cut = _tol(tol).rank_factor(a.shape) * s[0]
    return bool(np.any((s >= 0.1 * cut) & (s <= 10.0 * cut)))


def range_basis(m, tol: TolerancePolicy | None = None) -> np.ndarray:
    """Orthonormal basis of R(M) (columns), from the rank-truncated SVD."""
    a = as_matrix(m)
    u, s, _ = svd(a)
    return u[:, : _numeric_rank(s, a.shape, _tol(tol))]


def null_basis(m, tol: TolerancePolicy | None = None) -> np.ndarray:
    """Orthonormal basis of N(M) (columns)."""
    a = as_matrix(m)
    n = a.shape[1]
    if a.size == 0:
        return np.eye(n, dtype=complex)
    try:
        _, s, vh = np.linalg.svd(a, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise SVDError(a, exc) from exc
    r = _numeric_rank(s, a.shape, _tol(tol))
    return adj(vh)[:, r:]


def range_projector(m, tol: TolerancePolicy | None = None) -> np.ndarray:
    """Orthogonal projector ``P_M = U_r U_r*`` onto R(M)."""
    u = range_basis(m, tol)
    return u @ adj(u)


@dataclass(frozen=True)
class Subspace:
    """A subspace of C^n held as an orthonormal column basis."""

    ambient_dim: int
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @classmethod
    def range_of(cls, m, tol: TolerancePolicy | None = None) -> "Subspace":
        a = as_matrix(m)
        return cls(a.shape[0], range_basis(a, tol))

    @classmethod
    def null_of(cls, m, tol: TolerancePolicy | None = None) -> "Subspace":
        a = as_matrix(m)
        return cls(a.shape[1], null_basis(a, tol))

    @classmethod
    def span(cls, *vectors, tol: TolerancePolicy | None = None) -> "Subspace":
        cols = np.column_stack([np.asarray(v, dtype=complex) for v in vectors])
        return cls.range_of(cols, tol)

    def projector(self) -> np.ndarray:
        return self.basis @ adj(self.basis)

    def orthocomplement(self) -> "Subspace":
        if self.dim == 0:
            return Subspace(self.ambient_dim, np.eye(self.ambient_dim, dtype=complex))
        return Subspace(self.ambient_dim, null_basis(adj(self.basis)))


class SubspaceRelation(NamedTuple):
    a_in_b: bool
    b_in_a: bool
    dim_intersection: int
    dim_sum: int
    residual_a_in_b: float
    residual_b_in_a: float
    marginal: bool = False

    @property
    def equal(self) -> bool:
        return self.a_in_b and self.b_in_a


def _inclusion_residual(x: np.ndarray, p_y: np.ndarray) -> float:
    return fro(x - p_y @ x) / (1.0 + fro(x))


def subspace_relate(a, b, tol: TolerancePolicy | None = None) -> SubspaceRelation:
    """Inclusions and dimensions relating R(A) and R(B)."""
    tol = _tol(tol)
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[0] != b.shape[0]:
        raise ShapeError(f"row counts differ: {a.shape} vs {b.shape}")
    ua, ub = range_basis(a, tol), range_basis(b, tol)
    r_ab = _inclusion_residual(a, ub @ adj(ub))
    r_ba = _inclusion_residual(b, ua @ adj(ua))
    # joint rank on orthonormal bases so that scale differences between A and
    # B cannot push a genuine direction under the cutoff
    joint = np.hstack([ua, ub])
    dim_sum = rank(joint, tol) if joint.shape[1] else 0
    dim_int = ua.shape[1] + ub.shape[1] - dim_sum
    marginal = (
        is_marginal(r_ab, tol.eq_rel)
        or is_marginal(r_ba, tol.eq_rel)
        or rank_is_marginal(a, tol)
        or rank_is_marginal(b, tol)
        or (joint.shape[1] > 0 and rank_is_marginal(joint, tol))
    )
    return SubspaceRelation(
        a_in_b=r_ab <= tol.eq_rel,
        b_in_a=r_ba <= tol.eq_rel,
        dim_intersection=dim_int,
        dim_sum=dim_sum,
        residual_a_in_b=r_ab,
        residual_b_in_a=r_ba,
        marginal=marginal,
    )


def oblique_projector(s: Subspace, t: Subspace, tol: TolerancePolicy | None = None) -> np.ndarray:
    """Idempotent ``Q_{S//T}`` with range ``S`` and nullspace ``T``."""
    tol = _tol(tol)
    n = s.ambient_dim
    if t.ambient_dim != n:
        raise ShapeError("subspaces live in different ambient spaces")
    if s.dim == 0:
        if t.dim != n:
            raise ComplementarityError(0, t.dim, n)
        return np.zeros((n, n), complex)
    if t.dim == 0:
        if s.dim != n:
            raise ComplementarityError(0, s.dim, n)
        return np.eye(n, dtype=complex)
    rel = subspace_relate(s.basis, t.basis, tol)
    if rel.dim_intersection != 0 or rel.dim_sum != n:
        raise ComplementarityError(rel.dim_intersection, rel.dim_sum, n)
    k = np.hstack([s.basis, t.basis])
    coords = np.linalg.solve(k, np.eye(n))
    return s.basis @ coords[: s.dim, :]


class Predicates(NamedTuple):
    hermitian: bool
    psd: bool
    min_eigenvalue: float | None = None


def hermitian_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + adj(m))


def predicates(m, tol: TolerancePolicy | None = None) -> Predicates:
    tol = _tol(tol)
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"square matrix required, got {a.shape}")
    herm = fro(a - adj(a)) <= tol.eq_rel * (1.0 + fro(a))
    if not herm:
        return Predicates(False, False, None)
    if a.size == 0:
        return Predicates(True, True, 0.0)
    lam = np.linalg.eigvalsh(hermitian_part(a))
    lam_min = float(lam[0])
    scale = max(1.0, float(np.max(np.abs(lam))))
    return Predicates(True, lam_min >= -tol.psd_rel * scale, lam_min)


def is_hermitian(m, tol: TolerancePolicy | None = None) -> bool:
    return predicates(m, tol).hermitian


def is_psd(m, tol: TolerancePolicy | None = None) -> bool:
    return predicates(m, tol).psd


def psd_sqrt(w, tol: TolerancePolicy | None = None) -> np.ndarray:
    """PSD square root via the eigendecomposition of the Hermitian part."""
    a = as_matrix(w)
    if not is_psd(a, tol):
        raise LinalgError("weight is not positive semidefinite")
    lam, q = np.linalg.eigh(hermitian_part(a))
    return (q * np.sqrt(np.clip(lam, 0.0, None))) @ adj(q)


def schatten_norm(m, p: float) -> float:
    """Schatten p-norm ``(Σ σ_i^p)^(1/p)``, ``p >= 1``."""
    if not p >= 1:
        raise LinalgError(f"Schatten norm needs p >= 1, got {p}")
    s = np.linalg.svd(as_matrix(m), compute_uv=False)
    if s.size == 0:
        return 0.0
    if np.isinf(p):
        return float(s[0])
    top = s[0]
    if top == 0.0:
        return 0.0
    # scaled to avoid overflow for large p
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))


def weighted_schatten(m, w, p: float, tol: TolerancePolicy | None = None) -> float:
    """``‖W^{1/2} M‖_p`` for PSD ``W``."""
    a, wm = as_matrix(m), as_matrix(w)
    if wm.shape[1] != a.shape[0]:
        raise ShapeError(f"weight {wm.shape} does not compose with {a.shape}")
    return schatten_norm(psd_sqrt(wm, tol) @ a, p)


def weighted_seminorm(v, m, tol: TolerancePolicy | None = None) -> float:
    """``<Mv, v>^{1/2}`` for PSD ``M``."""
    wm = as_matrix(m)
    x = np.asarray(v, dtype=complex).reshape(-1)
    if wm.shape != (x.size, x.size):
        raise ShapeError(f"weight {wm.shape} does not match vector of length {x.size}")
    if not is_psd(wm, tol):
        raise LinalgError("weight is not positive semidefinite")
    val = np.real(np.vdot(x, wm @ x))
    return float(np.sqrt(max(val, 0.0)))

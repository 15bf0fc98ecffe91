"""Dagger subtractivity ``(B−A)† = B†−A†`` and its range version."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .inverses import moore_penrose
from .linalg import (
    DEFAULT_TOL,
    ShapeError,
    SubspaceRelation,
    TolerancePolicy,
    adj,
    as_matrix,
    difference,
    is_marginal,
    null_basis,
    rel_residual,
    subspace_relate,
    svd,
)


@dataclass
class SubtractivityVerdict:
    dsp: bool
    rdsp: bool
    residual_dsp: float
    rdsp_details: dict[str, SubspaceRelation]
    marginal: bool = False

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        return {
            "dsp": self.dsp,
            "rdsp": self.rdsp,
            "residual_dsp": self.residual_dsp,
            "rdsp_details": to_jsonable(self.rdsp_details),
            "marginal": self.marginal,
        }

    @classmethod
    def from_json(cls, d: dict) -> "SubtractivityVerdict":
        return cls(
            dsp=bool(d["dsp"]),
            rdsp=bool(d["rdsp"]),
            residual_dsp=float(d["residual_dsp"]),
            rdsp_details={k: SubspaceRelation(**v) for k, v in d["rdsp_details"].items()},
            marginal=bool(d["marginal"]),
        )


def check(a, b, tol: TolerancePolicy | None = None) -> SubtractivityVerdict:
    tol = tol or DEFAULT_TOL
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"shapes differ: {a.shape} vs {b.shape}")
    pa, pb = moore_penrose(a, tol), moore_penrose(b, tol)
    gap = difference(b, a, tol)
    pd = moore_penrose(gap, tol)
    diff = difference(pb, pa, tol)
    residual = rel_residual(pd, diff)
    # R((B−A)†) = R(B†−A†) and R((B*−A*)†) = R((B*)†−(A*)†); note (B*)† = (B†)*
    direct = subspace_relate(pd, diff, tol)
    adjoint = subspace_relate(moore_penrose(adj(gap), tol), adj(diff), tol)
    return SubtractivityVerdict(
        dsp=residual <= tol.eq_rel,
        rdsp=direct.equal and adjoint.equal,
        residual_dsp=residual,
        rdsp_details={"range": direct, "adjoint_range": adjoint},
        marginal=is_marginal(residual, tol.eq_rel) or direct.marginal or adjoint.marginal,
    )


def _factor(d: np.ndarray, e: np.ndarray, tol: TolerancePolicy) -> np.ndarray:
    nb = null_basis(d, tol)
    return moore_penrose(d, tol) @ e + nb @ adj(nb)


def invertible_factor_witnesses(
    a, b, tol: TolerancePolicy | None = None
) -> tuple[np.ndarray, np.ndarray] | None:
    """Invertible ``X, Y`` with ``(B†−A†)X = B*−A*`` and ``((B*)†−(A*)†)Y = B−A``.

    ``X = D†E + P_{N(D)}`` with ``D = B†−A†``, ``E = B*−A*``, and
    symmetrically for ``Y``.  Returns ``None`` when the range dagger
    subtractivity property fails, or when the constructed factors do not
    verify (which signals a tolerance-boundary case).
    """
    tol = tol or DEFAULT_TOL
    a, b = as_matrix(a), as_matrix(b)
    if not check(a, b, tol).rdsp:
        return None
    d = difference(moore_penrose(b, tol), moore_penrose(a, tol), tol)
    gap = difference(b, a, tol)
    x = _factor(d, adj(gap), tol)
    y = _factor(adj(d), gap, tol)
    for f, lhs, rhs in ((x, d @ x, adj(gap)), (y, adj(d) @ y, gap)):
        if rel_residual(lhs, rhs) > tol.eq_rel:
            return None
        _, s, _ = svd(f)
        if s[-1] <= tol.rank_factor(f.shape) * s[0]:
            return None
    return x, y

"""Decision procedures for the space, Löwner, star, minus, diamond and sharp orders."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .inverses import group_inverse, moore_penrose
from .linalg import (
    DEFAULT_TOL,
    ComplementarityError,
    ShapeError,
    Subspace,
    TolerancePolicy,
    adj,
    as_matrix,
    difference,
    is_marginal,
    oblique_projector,
    predicates,
    rank,
    rank_is_marginal,
    range_projector,
    rel_residual,
    subspace_relate,
)


class OrderRelation(str, enum.Enum):
    SPACE = "space"
    LOWNER = "lowner"
    STAR = "star"
    MINUS = "minus"
    DIAMOND = "diamond"
    SHARP = "sharp"


@dataclass
class OrderVerdict:
    relation: OrderRelation
    holds: bool
    applicable: bool = True
    marginal: bool = False
    residuals: dict[str, float] = field(default_factory=dict)
    witnesses: dict[str, np.ndarray] = field(default_factory=dict)
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        return {
            "relation": self.relation.value,
            "holds": self.holds,
            "applicable": self.applicable,
            "marginal": self.marginal,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
            "witnesses": {k: to_jsonable(v) for k, v in self.witnesses.items()},
            "reason": self.reason,
        }

    @classmethod
    def from_json(cls, d: dict) -> "OrderVerdict":
        from .serialize import matrix_from_json

        return cls(
            relation=OrderRelation(d["relation"]),
            holds=bool(d["holds"]),
            applicable=bool(d["applicable"]),
            marginal=bool(d["marginal"]),
            residuals={k: float(v) for k, v in d["residuals"].items()},
            witnesses={k: matrix_from_json(v, k) for k, v in d["witnesses"].items()},
            reason=d["reason"],
        )


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ShapeError(f"orders need square matrices of equal size, got {a.shape} and {b.shape}")
    return a, b


def _equalities(tol: TolerancePolicy, **pairs) -> tuple[dict[str, float], bool, bool]:
    res = {name: rel_residual(x, y) for name, (x, y) in pairs.items()}
    ok = all(r <= tol.eq_rel for r in res.values())
    marginal = any(is_marginal(r, tol.eq_rel) for r in res.values())
    return res, ok, marginal


def _space(a, b, tol) -> OrderVerdict:
    col = subspace_relate(a, b, tol)
    row = subspace_relate(adj(a), adj(b), tol)
    return OrderVerdict(
        OrderRelation.SPACE,
        holds=col.a_in_b and row.a_in_b,
        marginal=is_marginal(col.residual_a_in_b, tol.eq_rel)
        or is_marginal(row.residual_a_in_b, tol.eq_rel),
        residuals={"range": col.residual_a_in_b, "corange": row.residual_a_in_b},
    )


def _lowner(a, b, tol) -> OrderVerdict:
    if not (predicates(a, tol).hermitian and predicates(b, tol).hermitian):
        return OrderVerdict(OrderRelation.LOWNER, False, applicable=False,
                            reason="A,B not Hermitian")
    pred = predicates(b - a, tol)
    lam = pred.min_eigenvalue if pred.min_eigenvalue is not None else 0.0
    scale = max(1.0, float(np.linalg.norm(b - a, 2)))
    deficit = max(0.0, -lam) / scale
    return OrderVerdict(
        OrderRelation.LOWNER,
        holds=pred.psd,
        marginal=is_marginal(deficit, tol.psd_rel),
        residuals={"min_eigenvalue": lam, "psd_deficit": deficit},
    )


def _star(a, b, tol) -> OrderVerdict:
    ah = adj(a)
    res, ok, marg = _equalities(tol, left=(ah @ a, ah @ b), right=(a @ ah, b @ ah))
    p, q = range_projector(a, tol), range_projector(ah, tol)
    wit_res, _, _ = _equalities(tol, witness_p=(a, p @ b), witness_q=(ah, q @ adj(b)))
    res.update(wit_res)
    return OrderVerdict(OrderRelation.STAR, ok, marginal=marg, residuals=res,
                        witnesses={"P": p, "Q": q})


def _direct_sum(x, y, whole, tol) -> tuple[bool, dict, bool]:
    """Whether R(whole) = R(x) ∔ R(y), given R(x), R(y) ⊆ R(whole) separately."""
    rel = subspace_relate(x, y, tol)
    rx, ry, rw = rank(x, tol), rank(y, tol), rank(whole, tol)
    ok = rel.dim_intersection == 0 and rw == rx + ry
    return ok, {"dim_intersection": rel.dim_intersection, "rank_gap": rw - rx - ry}, rel.marginal


def minus_witnesses(a, b, tol: TolerancePolicy | None = None) -> dict[str, np.ndarray]:
    """Idempotents ``P, Q`` with ``A = PB``, ``A* = QB*``, ``R(P)=R(A)``, ``R(Q)=R(A*)``.

    Nullspaces are ``R(B−A) ∔ R(B)⊥`` and the adjoint analogue.  Raises
    :class:`ComplementarityError` when the pair is not minus-ordered.
    """
    tol = tol or DEFAULT_TOL
    out = {}
    for name, x, y in (("P", a, b), ("Q", adj(a), adj(b))):
        rng_x = Subspace.range_of(x, tol)
        d = difference(y, x, tol)
        null = np.hstack([Subspace.range_of(d, tol).basis,
                          Subspace.range_of(y, tol).orthocomplement().basis])
        out[name] = oblique_projector(rng_x, Subspace(x.shape[0], null), tol)
    return out


def _minus(a, b, tol) -> OrderVerdict:
    col = subspace_relate(a, b, tol)
    row = subspace_relate(adj(a), adj(b), tol)
    d = difference(b, a, tol)
    ok_c, det_c, marg_c = _direct_sum(a, d, b, tol)
    ok_r, det_r, marg_r = _direct_sum(adj(a), adj(d), adj(b), tol)
    holds = col.a_in_b and row.a_in_b and ok_c and ok_r
    residuals = {
        "range_inclusion": col.residual_a_in_b,
        "corange_inclusion": row.residual_a_in_b,
        "range_dim_intersection": float(det_c["dim_intersection"]),
        "corange_dim_intersection": float(det_r["dim_intersection"]),
        "rank_gap": float(det_c["rank_gap"]),
    }
    marginal = (
        is_marginal(col.residual_a_in_b, tol.eq_rel)
        or is_marginal(row.residual_a_in_b, tol.eq_rel)
        or marg_c or marg_r
        or rank_is_marginal(a, tol) or rank_is_marginal(b, tol) or rank_is_marginal(d, tol)
    )
    witnesses = {}
    if holds:
        try:
            witnesses = minus_witnesses(a, b, tol)
        except ComplementarityError:
            marginal = True
        else:
            wres, _, _ = _equalities(
                tol,
                witness_p=(a, witnesses["P"] @ b),
                witness_q=(adj(a), witnesses["Q"] @ adj(b)),
            )
            residuals.update(wres)
    return OrderVerdict(OrderRelation.MINUS, holds, marginal=marginal,
                        residuals=residuals, witnesses=witnesses)


def _diamond(a, b, tol) -> OrderVerdict:
    # Under the space order AA*A = AB*A is equivalent to A = P_A B P_{A*}
    # (sandwich by A† on both sides).  The cubic residual weights a singular
    # direction by σ³ and hides mismatches on small σ, so the decision uses
    # the projected form; the cubic residual is reported alongside.
    sp = _space(a, b, tol)
    ah = adj(a)
    proj = range_projector(a, tol) @ b @ range_projector(ah, tol)
    res, ok, marg = _equalities(tol, projected=(a, proj))
    res["cubic"] = rel_residual(a @ ah @ a, a @ adj(b) @ a)
    res.update(sp.residuals)
    return OrderVerdict(OrderRelation.DIAMOND, sp.holds and ok,
                        marginal=sp.marginal or marg, residuals=res)


def _sharp(a, b, tol) -> OrderVerdict:
    ga = group_inverse(a, tol)
    gb = group_inverse(b, tol)
    if ga is None or gb is None:
        who = "A" if ga is None else "B"
        if ga is None and gb is None:
            who = "A,B"
        return OrderVerdict(OrderRelation.SHARP, False, applicable=False,
                            reason=f"{who} not group invertible")
    q = a @ ga
    res, ok, marg = _equalities(tol, left=(a, q @ b), right=(a, b @ q))
    cross, _, _ = _equalities(tol, square_vs_ab=(a @ a, a @ b), square_vs_ba=(a @ a, b @ a))
    res.update(cross)
    return OrderVerdict(OrderRelation.SHARP, ok, marginal=marg, residuals=res,
                        witnesses={"Q": q})


_DECIDERS = {
    OrderRelation.SPACE: _space,
    OrderRelation.LOWNER: _lowner,
    OrderRelation.STAR: _star,
    OrderRelation.MINUS: _minus,
    OrderRelation.DIAMOND: _diamond,
    OrderRelation.SHARP: _sharp,
}


def holds(rel: OrderRelation | str, a, b, tol: TolerancePolicy | None = None) -> OrderVerdict:
    """Decide ``A ≤ B`` for the given relation."""
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    return _DECIDERS[OrderRelation(rel)](a, b, tol)


def is_cross_hermitian(a, b, tol: TolerancePolicy | None = None) -> bool:
    """Whether both ``AB*`` and ``B*A`` are Hermitian."""
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    return predicates(a @ adj(b), tol).hermitian and predicates(adj(b) @ a, tol).hermitian


@dataclass
class OrderReport:
    verdicts: dict[OrderRelation, OrderVerdict]
    cross_hermitian: bool

    def __getitem__(self, rel) -> OrderVerdict:
        return self.verdicts[OrderRelation(rel)]

    def flags(self) -> dict[str, bool]:
        return {r.value: v.holds for r, v in self.verdicts.items()}

    def to_json(self) -> dict:
        return {
            "verdicts": {r.value: v.to_json() for r, v in self.verdicts.items()},
            "cross_hermitian": self.cross_hermitian,
        }

    @classmethod
    def from_json(cls, d: dict) -> "OrderReport":
        return cls(
            verdicts={OrderRelation(k): OrderVerdict.from_json(v) for k, v in d["verdicts"].items()},
            cross_hermitian=bool(d["cross_hermitian"]),
        )


def order_report(a, b, tol: TolerancePolicy | None = None) -> OrderReport:
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    return OrderReport(
        verdicts={rel: fn(a, b, tol) for rel, fn in _DECIDERS.items()},
        cross_hermitian=is_cross_hermitian(a, b, tol),
    )


def dagger_order_report(a, b, tol: TolerancePolicy | None = None) -> OrderReport:
    """All six orders between ``A†`` and ``B†``."""
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    return order_report(moore_penrose(a, tol), moore_penrose(b, tol), tol)

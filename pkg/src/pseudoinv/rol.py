"""Reverse order law ``(AB)† = B†A†``: direct check, Greville's range
conditions, and the sufficient conditions evaluated as implications."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import orders
from .inverses import PenroseClass, is_ep, moore_penrose, penrose_class
from .linalg import (
    DEFAULT_TOL,
    ShapeError,
    TolerancePolicy,
    adj,
    as_matrix,
    is_marginal,
    predicates,
    product,
    range_projector,
    rel_residual,
    subspace_relate,
)


@dataclass
class ConditionResult:
    name: str
    hypothesis_holds: bool
    conclusion_holds: bool
    marginal: bool = False
    note: str = ""

    @property
    def violated(self) -> bool:
        return self.hypothesis_holds and not self.conclusion_holds

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "marginal": self.marginal,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ConditionResult":
        return cls(**d)


@dataclass
class RolReport:
    rol_holds: bool
    rol_residual: float
    greville_1: bool
    greville_2: bool
    conditions: list[ConditionResult] = field(default_factory=list)
    marginal: bool = False
    ab_pinv: np.ndarray | None = None
    b_pinv_a_pinv: np.ndarray | None = None

    @property
    def greville(self) -> bool:
        return self.greville_1 and self.greville_2

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        return {
            "rol_holds": self.rol_holds,
            "rol_residual": self.rol_residual,
            "greville_1": self.greville_1,
            "greville_2": self.greville_2,
            "conditions": [c.to_json() for c in self.conditions],
            "marginal": self.marginal,
            "ab_pinv": to_jsonable(self.ab_pinv),
            "b_pinv_a_pinv": to_jsonable(self.b_pinv_a_pinv),
        }

    @classmethod
    def from_json(cls, d: dict) -> "RolReport":
        from .serialize import matrix_from_json

        def mat(key):
            return None if d[key] is None else matrix_from_json(d[key], key)
        return cls(
            rol_holds=bool(d["rol_holds"]),
            rol_residual=float(d["rol_residual"]),
            greville_1=bool(d["greville_1"]),
            greville_2=bool(d["greville_2"]),
            conditions=[ConditionResult.from_json(c) for c in d["conditions"]],
            marginal=bool(d["marginal"]),
            ab_pinv=mat("ab_pinv"),
            b_pinv_a_pinv=mat("b_pinv_a_pinv"),
        )


def _pair(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ShapeError(f"square matrices of equal size required, got {a.shape} and {b.shape}")
    return a, b


def _rol_core(a, b, tol) -> RolReport:
    ab = product(a, b, tol=tol)
    ab_p = moore_penrose(ab, tol)
    ba_p = moore_penrose(b, tol) @ moore_penrose(a, tol)
    residual = rel_residual(ab_p, ba_p)
    g1 = subspace_relate(product(adj(a), a, b, tol=tol), b, tol)
    g2 = subspace_relate(product(b, adj(b), adj(a), tol=tol), adj(a), tol)
    marginal = (
        is_marginal(residual, tol.eq_rel)
        or is_marginal(g1.residual_a_in_b, tol.eq_rel)
        or is_marginal(g2.residual_a_in_b, tol.eq_rel)
    )
    return RolReport(
        rol_holds=residual <= tol.eq_rel,
        rol_residual=residual,
        greville_1=g1.a_in_b,
        greville_2=g2.a_in_b,
        marginal=marginal,
        ab_pinv=ab_p,
        b_pinv_a_pinv=ba_p,
    )


def rol_check(a, b, tol: TolerancePolicy | None = None, conditions: bool = True) -> RolReport:
    """Check ``(AB)† = B†A†`` together with Greville's conditions
    ``R(A*AB) ⊆ R(B)`` and ``R(BB*A*) ⊆ R(A*)``."""
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    report = _rol_core(a, b, tol)
    if conditions:
        report.conditions = sufficient_conditions(a, b, tol, _rol=report)
    return report


def _ranges_equal(x, y, tol) -> bool:
    return subspace_relate(x, y, tol).equal


def sufficient_conditions(a, b, tol: TolerancePolicy | None = None, _rol: RolReport | None = None
                          ) -> list[ConditionResult]:
    """Evaluate every known sufficient condition for the reverse order law.

    Each row records whether its hypothesis holds for ``(A, B)`` and whether
    the conclusion does; a row with a true hypothesis and a false
    conclusion is a counterexample.
    """
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    rol = _rol or _rol_core(a, b, tol)
    ab = product(a, b, tol=tol)
    pa, pb = predicates(a, tol), predicates(b, tol)
    a_ep = is_ep(a, tol)
    rows: list[ConditionResult] = []

    def add(name, hyp, concl, marginal=False, note=""):
        rows.append(ConditionResult(name, bool(hyp), bool(concl),
                                    bool(marginal or rol.marginal), note))

    hyp_a = a_ep and is_ep(b, tol) and is_ep(ab, tol) and _ranges_equal(a, ab, tol)
    add("a_ep_triple", hyp_a, rol.rol_holds, note="A, B, AB EP and R(A) = R(AB)")

    hyp_b = pa.hermitian and pb.hermitian and rel_residual(ab, b @ a) <= tol.eq_rel
    add("b_commuting_hermitian", hyp_b, rol.rol_holds, note="A, B Hermitian, AB = BA")

    hyp_c = False
    concl_c = rol.rol_holds
    marg_c = False
    if pa.psd and pb.psd:
        low = orders.holds("lowner", a, b, tol)
        anti = orders.holds("lowner", moore_penrose(b, tol), moore_penrose(a, tol), tol)
        hyp_c = low.holds and anti.holds
        marg_c = low.marginal or anti.marginal
        if hyp_c:
            concl_c = rol.rol_holds and _rol_core(b, a, tol).rol_holds
    add("c_lowner_antitone", hyp_c, concl_c, marg_c,
        note="A, B PSD, A <= B and B† <= A†; concludes ROL for AB and BA")

    star = orders.holds("star", a, b, tol)
    a_factor = rel_residual(a, range_projector(a, tol) @ b) <= tol.eq_rel
    add("d_ep_star", a_ep and star.holds, rol.rol_holds and a_factor, star.marginal,
        note="A EP and A <=* B implies ROL and A = P_A B")
    add("d_ep_star_converse", a_ep and rol.rol_holds and a_factor, star.holds, star.marginal,
        note="A EP, ROL and A = P_A B implies A <=* B")

    add("e_star_hermitian", pb.hermitian and star.holds, rol.rol_holds, star.marginal,
        note="B Hermitian and A <=* B")

    hyp_f = False
    marg_f = False
    if a_ep and pb.hermitian:
        sharp = orders.holds("sharp", a, b, tol)
        hyp_f, marg_f = sharp.holds, sharp.marginal
    add("f_sharp_ep_hermitian", hyp_f, rol.rol_holds, marg_f,
        note="A EP, B Hermitian and A <=# B")

    hyp_g = False
    marg_g = False
    if pa.hermitian:
        space = orders.holds("space", a, b, tol)
        marg_g = space.marginal
        if space.holds:
            hyp_g = is_ep(product(moore_penrose(b, tol), a, b, tol=tol), tol)
    add("g_preorder_ep", hyp_g, rol.rol_holds, marg_g,
        note="A Hermitian, A <=s B and B†AB EP")
    return rows


def ab_class_membership(a, b, tol: TolerancePolicy | None = None) -> PenroseClass:
    """Penrose equations that ``B†A†`` satisfies as an inverse of ``AB``."""
    tol = tol or DEFAULT_TOL
    a, b = _pair(a, b)
    return penrose_class(product(a, b, tol=tol), moore_penrose(b, tol) @ moore_penrose(a, tol), tol)

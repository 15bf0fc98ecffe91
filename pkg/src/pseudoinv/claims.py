"""Registered theorem claims, each checkable on a single matrix pair.

A claim names the generator families it draws from and a check that
returns an :class:`Outcome`: whether the hypothesis was exercised, whether
the conclusion held, and whether any decision involved sat at a tolerance
boundary.  Equivalences count a trial as exercised when either side holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import orders, subtractivity
from .generators import GeneratedPair
from .inverses import group_inverse, is_ep, moore_penrose, penrose_class
from .linalg import (
    Subspace,
    TolerancePolicy,
    adj,
    difference,
    is_marginal,
    null_basis,
    predicates,
    product,
    range_basis,
    range_projector,
    rel_residual,
    subspace_relate,
)
from .rol import rol_check, sufficient_conditions
from .weighted import is_mn_weighted_gen_inverse, m_inverse, m_inverse_membership, weighted_lsq_check


class Outcome(NamedTuple):
    exercised: bool
    ok: bool
    marginal: bool = False
    residuals: dict = {}


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    families: tuple[str, ...]
    check: Callable[[GeneratedPair, TolerancePolicy, np.random.Generator], Outcome]
    in_suite: bool = True


class _Eval:
    """Evaluates predicates on one pair while accumulating the marginal flag."""

    def __init__(self, tol: TolerancePolicy):
        self.tol = tol
        self.marginal = False
        self.res: dict[str, float] = {}

    def order(self, rel, a, b) -> bool:
        v = orders.holds(rel, a, b, self.tol)
        self.marginal |= v.marginal
        return v.holds

    def sub(self, a, b):
        v = subtractivity.check(a, b, self.tol)
        self.marginal |= v.marginal
        return v

    def rol(self, a, b):
        r = rol_check(a, b, self.tol, conditions=False)
        self.marginal |= r.marginal
        return r

    def eq(self, name, x, y) -> bool:
        r = rel_residual(x, y)
        self.res[name] = r
        self.marginal |= is_marginal(r, self.tol.eq_rel)
        return r <= self.tol.eq_rel

    def small(self, name, x, scale) -> bool:
        r = float(np.linalg.norm(x)) / (1.0 + scale)
        self.res[name] = r
        self.marginal |= is_marginal(r, self.tol.eq_rel)
        return r <= self.tol.eq_rel

    def rel(self, x, y):
        r = subspace_relate(x, y, self.tol)
        self.marginal |= r.marginal
        return r

    def psd(self, m) -> bool:
        p = predicates(m, self.tol)
        if p.min_eigenvalue is not None:
            scale = max(1.0, float(np.linalg.norm(m, 2)))
            self.marginal |= is_marginal(max(0.0, -p.min_eigenvalue) / scale, self.tol.psd_rel)
        return p.psd

    def out(self, exercised, ok) -> Outcome:
        return Outcome(bool(exercised), bool(ok), self.marginal, dict(self.res))


def _dag(m, tol):
    return moore_penrose(m, tol)


def _orth(ev: _Eval, name, x, y) -> bool:
    """Ranges of ``x`` and ``y`` are orthogonal."""
    ux, uy = range_basis(x, ev.tol), range_basis(y, ev.tol)
    return ev.small(name, adj(ux) @ uy, 0.0)


# ---------------------------------------------------------------- orders / subtractivity

def _star_iff_minus_dsp(p, tol, rng):
    ev = _Eval(tol)
    s, m = ev.order("star", p.a, p.b), ev.order("minus", p.a, p.b)
    d = ev.sub(p.a, p.b).dsp
    return ev.out(s or m, s == (m and d))


def _star_iff_minus_ch(p, tol, rng):
    ev = _Eval(tol)
    s, m = ev.order("star", p.a, p.b), ev.order("minus", p.a, p.b)
    return ev.out(s or m, s == (m and orders.is_cross_hermitian(p.a, p.b, tol)))


def _star_iff_diamond_ch(p, tol, rng):
    ev = _Eval(tol)
    s, d = ev.order("star", p.a, p.b), ev.order("diamond", p.a, p.b)
    return ev.out(s or d, s == (d and orders.is_cross_hermitian(p.a, p.b, tol)))


def _star_implies_minus_diamond(p, tol, rng):
    ev = _Eval(tol)
    s = ev.order("star", p.a, p.b)
    return ev.out(s, not s or (ev.order("minus", p.a, p.b) and ev.order("diamond", p.a, p.b)))


def _star_implies_dsp(p, tol, rng):
    ev = _Eval(tol)
    s = ev.order("star", p.a, p.b)
    return ev.out(s, not s or ev.sub(p.a, p.b).dsp)


def _dsp_implies_rdsp(p, tol, rng):
    ev = _Eval(tol)
    v = ev.sub(p.a, p.b)
    return ev.out(v.dsp, not v.dsp or v.rdsp)


def _star_iff_sum_projector(p, tol, rng):
    """Summand form: with C = B − A, A ≤* A+C iff A ≤− A+C and (A+C)(A†+C†) = P_{A+C}."""
    ev = _Eval(tol)
    a, b = p.a, p.b
    c = difference(b, a, tol)
    s, m = ev.order("star", a, b), ev.order("minus", a, b)
    proj = ev.eq("sum_projector", b @ (_dag(a, tol) + _dag(c, tol)), range_projector(b, tol))
    return ev.out(s or m, s == (m and proj))


def _orthogonal_decomposition(ev, b, a, extra):
    """``R(B) = R(A) ⊕ R(extra)``: equal span and orthogonal pieces."""
    tol = ev.tol
    joint = np.hstack([range_basis(a, tol), range_basis(extra, tol)])
    ok_span = ev.rel(joint, b).equal
    ok_meet = subspace_relate(a, extra, tol).dim_intersection == 0
    return ok_span and ok_meet and _orth(ev, "orth", a, extra)


def _star_iff_orthogonal_ranges(p, tol, rng):
    ev = _Eval(tol)
    a, b = p.a, p.b
    s = ev.order("star", a, b)
    d = difference(b, a, tol)
    dec = (_orthogonal_decomposition(ev, b, a, d)
           and _orthogonal_decomposition(ev, adj(b), adj(a), adj(d)))
    return ev.out(s or dec, s == dec)


def _star_iff_orthogonal_dagger(p, tol, rng):
    ev = _Eval(tol)
    a, b = p.a, p.b
    s = ev.order("star", a, b)
    d = difference(_dag(b, tol), _dag(a, tol), tol)
    dec = (_orthogonal_decomposition(ev, b, a, adj(d))
           and _orthogonal_decomposition(ev, adj(b), adj(a), d))
    return ev.out(s or dec, s == dec)


def _under_rdsp(rel_lhs, rel_rhs, dagger_rhs=False):
    def check(p, tol, rng):
        ev = _Eval(tol)
        v = ev.sub(p.a, p.b)
        if not v.rdsp:
            return ev.out(False, True)
        lhs = ev.order(rel_lhs, p.a, p.b)
        x, y = (_dag(p.a, tol), _dag(p.b, tol)) if dagger_rhs else (p.a, p.b)
        rhs = ev.order(rel_rhs, x, y)
        return ev.out(True, lhs == rhs)
    return check


def _star_dagger_monotone(p, tol, rng):
    ev = _Eval(tol)
    s = ev.order("star", p.a, p.b)
    sd = ev.order("star", _dag(p.a, tol), _dag(p.b, tol))
    return ev.out(s or sd, s == sd)


def _sharp_range_char(p, tol, rng):
    ev = _Eval(tol)
    a, b = p.a, p.b
    v = orders.holds("sharp", a, b, tol)
    if not v.applicable:
        return ev.out(False, True)
    ev.marginal |= v.marginal
    d = difference(b, a, tol)
    rel = ev.rel(np.hstack([range_basis(a, tol), range_basis(d, tol)]), b)
    direct = rel.equal and subspace_relate(a, d, tol).dim_intersection == 0
    char = (direct
            and ev.small("a_kills_gap", a @ d, float(np.linalg.norm(a) * np.linalg.norm(d)))
            and ev.small("gap_kills_a", d @ a, float(np.linalg.norm(a) * np.linalg.norm(d))))
    return ev.out(v.holds or char, v.holds == char)


def _ep_star_iff_sharp(p, tol, rng):
    ev = _Eval(tol)
    if not (is_ep(p.a, tol) and group_inverse(p.b, tol) is not None):
        return ev.out(False, True)
    s, sh = ev.order("star", p.a, p.b), ev.order("sharp", p.a, p.b)
    return ev.out(True, s == sh)


def _witnesses(p, tol, rng):
    ev = _Eval(tol)
    v = ev.sub(p.a, p.b)
    if not v.rdsp:
        return ev.out(False, True)
    return ev.out(True, subtractivity.invertible_factor_witnesses(p.a, p.b, tol) is not None)


# ---------------------------------------------------------------- monotonicity of the inverse

def _lowner_conditions(ev, a, b):
    tol = ev.tol
    c1 = ev.psd(b - a)
    c2 = ev.psd(_dag(a, tol) - _dag(b, tol))
    ra, rb = Subspace.range_of(a, tol), Subspace.range_of(b, tol)
    na, nb = Subspace.null_of(a, tol), Subspace.null_of(b, tol)
    m1 = ev.rel(ra.basis, nb.basis) if ra.dim and nb.dim else None
    m2 = ev.rel(rb.basis, na.basis) if rb.dim and na.dim else None
    c3 = (m1 is None or m1.dim_intersection == 0) and (m2 is None or m2.dim_intersection == 0)
    return c1, c2, c3


def _lowner_antitone(direction):
    def check(p, tol, rng):
        ev = _Eval(tol)
        if not (predicates(p.a, tol).psd and predicates(p.b, tol).psd):
            return ev.out(False, True)
        c = dict(zip((1, 2, 3), _lowner_conditions(ev, p.a, p.b)))
        i, j, k = direction
        hyp = c[i] and c[j]
        return ev.out(hyp, not hyp or c[k])
    return check


def _lowner_star_monotone(p, tol, rng):
    ev = _Eval(tol)
    if not (predicates(p.a, tol).hermitian and predicates(p.b, tol).hermitian):
        return ev.out(False, True)
    ad, bd = _dag(p.a, tol), _dag(p.b, tol)
    lhs = ev.order("lowner", p.a, p.b) and ev.order("star", p.a, p.b)
    rhs = ev.order("lowner", ad, bd) and ev.order("star", ad, bd)
    return ev.out(lhs or rhs, lhs == rhs)


# ---------------------------------------------------------------- reverse order law

def _greville_iff_rol(p, tol, rng):
    ev = _Eval(tol)
    r = ev.rol(p.a, p.b)
    return ev.out(r.rol_holds or r.greville, r.rol_holds == r.greville)


def _rol_condition(name):
    def check(p, tol, rng):
        row = {c.name: c for c in sufficient_conditions(p.a, p.b, tol)}[name]
        return Outcome(row.hypothesis_holds, not row.violated, row.marginal, {})
    return check


def _ab_class(p, tol, rng):
    if not (is_ep(p.a, tol) and is_ep(p.b, tol) and subspace_relate(p.a, p.b, tol).a_in_b):
        return Outcome(False, True)
    cls = penrose_class(p.a @ p.b, _dag(p.b, tol) @ _dag(p.a, tol), tol)
    marginal = any(is_marginal(r, tol.eq_rel) for r in cls.residuals[:3])
    return Outcome(True, cls.contains(1, 2, 3), marginal, {"residuals": list(cls.residuals)})


# ---------------------------------------------------------------- weighted inverses

def _m_lemma(forward: bool):
    def check(p, tol, rng):
        ev = _Eval(tol)
        t, m = p.a, p.b
        invariant = ev.rel(m @ t, t).a_in_b
        member = m_inverse_membership(t, _dag(t, tol), m, tol)
        hyp, concl = (invariant, member) if forward else (member, invariant)
        return ev.out(hyp, not hyp or concl)
    return check


def _random_psd_in(basis: np.ndarray, rng) -> np.ndarray:
    if basis.shape[1] == 0:
        return np.zeros((basis.shape[0],) * 2, complex)
    k = int(rng.integers(1, basis.shape[1] + 1))
    g = basis @ (rng.standard_normal((basis.shape[1], k)) + 1j * rng.standard_normal((basis.shape[1], k)))
    return g @ adj(g)


def _im_weight(a, b, tol, rng, statement_form: bool):
    m1 = _random_psd_in(range_basis(product(adj(b), a, tol=tol), tol), rng)
    other = product(a, _dag(b, tol) if statement_form else adj(_dag(b, tol)), tol=tol)
    m2 = _random_psd_in(null_basis(other, tol), rng)
    return m1 + m2


def _im_weighted(statement_form: bool):
    def check(p, tol, rng):
        a, b = p.a, p.b
        if not (is_ep(a, tol) and is_ep(b, tol) and subspace_relate(a, b, tol).a_in_b):
            return Outcome(False, True)
        if statement_form and not predicates(b, tol).hermitian:
            return Outcome(False, True)
        m = _im_weight(a, b, tol, rng, statement_form)
        n = a.shape[0]
        res = is_mn_weighted_gen_inverse(a @ b, _dag(b, tol) @ _dag(a, tol), np.eye(n), m, tol)
        marginal = any(is_marginal(r, tol.eq_rel) for r in res.residuals)
        return Outcome(True, res.holds, marginal, {"residuals": list(res.residuals)})
    return check


def _ib2_weighted(p, tol, rng):
    a, b = p.a, p.b
    if not (is_ep(a, tol) and predicates(b, tol).hermitian and subspace_relate(a, b, tol).a_in_b):
        return Outcome(False, True)
    n = a.shape[0]
    res = is_mn_weighted_gen_inverse(a @ b, _dag(b, tol) @ _dag(a, tol), np.eye(n), b @ b, tol)
    marginal = any(is_marginal(r, tol.eq_rel) for r in res.residuals)
    return Outcome(True, res.holds, marginal, {"residuals": list(res.residuals)})


def _pw_p2(p, tol, rng):
    chk = weighted_lsq_check(p.a, p.b, p.weight, 2, n_probes=0, tol=tol)
    return Outcome(True, chk.passes, is_marginal(chk.oracle_gap, tol.eq_rel),
                   {"candidate": chk.value_at_candidate, "oracle": chk.p2_oracle_value,
                    "gap": chk.oracle_gap})


def _m_inverse_parametric(p, tol, rng):
    """Commuting Hermitian A, B with A PSD: the A-inverses of AB are B†A† + Z, R(Z) ⊆ N(AB)."""
    ev = _Eval(tol)
    lam, v = np.linalg.eigh(p.a)
    a, b = (v * np.abs(lam)) @ adj(v), p.b
    t = product(a, b, tol=tol)
    sol = m_inverse(t, a, tol)
    x0 = _dag(b, tol) @ _dag(a, tol)
    kernel_ok = ev.rel(sol.kernel_basis.basis, null_basis(t, tol)).equal if sol.kernel_basis.dim \
        else null_basis(t, tol).shape[1] == 0
    nb = null_basis(t, tol)
    z = nb @ (rng.standard_normal((nb.shape[1], t.shape[0])) if nb.shape[1] else np.zeros((0, t.shape[0])))
    ok = kernel_ok and m_inverse_membership(t, x0, a, tol) and m_inverse_membership(t, x0 + z, a, tol)
    return ev.out(True, ok)


# ---------------------------------------------------------------- fuzz-only implications

def _implies(lhs, rhs, hermitian_b=False):
    def check(p, tol, rng):
        ev = _Eval(tol)
        if hermitian_b and not predicates(p.b, tol).hermitian:
            return ev.out(False, True)
        hyp = ev.order(lhs, p.a, p.b)
        if not hyp:
            return ev.out(False, True)
        if rhs == "rol":
            concl = ev.rol(p.a, p.b).rol_holds
        else:
            concl = ev.order(rhs, p.a, p.b)
        return ev.out(True, concl)
    return check


STRUCTURED = ("star_pair", "minus_pair", "diamond_pair", "unstructured")
RDSP = ("rdsp_diagonal", "minus_pair", "diamond_pair", "star_pair")

_CLAIMS = [
    Claim("star_iff_minus_and_dsp", "star order iff minus order and dagger subtractivity",
          ("star_pair", "minus_pair", "unstructured"), _star_iff_minus_dsp),
    Claim("star_iff_minus_and_cross_hermitian", "star order iff minus order with AB*, B*A Hermitian",
          ("star_pair", "minus_pair", "unstructured"), _star_iff_minus_ch),
    Claim("star_iff_diamond_and_cross_hermitian", "star order iff diamond order with AB*, B*A Hermitian",
          ("star_pair", "diamond_pair", "minus_pair"), _star_iff_diamond_ch),
    Claim("star_implies_minus_and_diamond", "star order implies minus and diamond orders",
          ("star_pair", "ep_star_pair", "hermitian_star_lowner"), _star_implies_minus_diamond),
    Claim("star_implies_dsp", "star order implies dagger subtractivity",
          ("star_pair", "ep_star_pair", "hermitian_star_lowner"), _star_implies_dsp),
    Claim("dsp_implies_rdsp", "dagger subtractivity implies its range version",
          ("star_pair", "rdsp_diagonal", "minus_pair"), _dsp_implies_rdsp),
    Claim("star_iff_minus_and_sum_projector",
          "with C = B − A: star order iff minus order and (A+C)(A†+C†) = P_{A+C}",
          ("star_pair", "minus_pair"), _star_iff_sum_projector),
    Claim("star_iff_orthogonal_ranges", "star order iff R(B) = R(A) ⊕ R(B−A) on both sides",
          STRUCTURED, _star_iff_orthogonal_ranges),
    Claim("star_iff_orthogonal_dagger_decomposition",
          "star order iff R(B) = R(A) ⊕ R((B†−A†)*) and R(B*) = R(A*) ⊕ R(B†−A†)",
          STRUCTURED, _star_iff_orthogonal_dagger),
    Claim("minus_iff_diamond_under_rdsp", "under range dagger subtractivity, minus iff diamond",
          RDSP, _under_rdsp("minus", "diamond")),
    Claim("minus_dagger_monotone_under_rdsp", "under range dagger subtractivity, A ≤− B iff A† ≤− B†",
          RDSP, _under_rdsp("minus", "minus", dagger_rhs=True)),
    Claim("diamond_dagger_monotone_under_rdsp", "under range dagger subtractivity, A ≤⋄ B iff A† ≤⋄ B†",
          RDSP, _under_rdsp("diamond", "diamond", dagger_rhs=True)),
    Claim("star_dagger_monotone", "A ≤* B iff A† ≤* B†",
          ("star_pair", "minus_pair", "unstructured"), _star_dagger_monotone),
    Claim("lowner_antitone_12_3", "PSD: A ≤ B and B† ≤ A† imply trivially meeting ranges",
          ("psd_lowner_equal_range", "mixed_psd", "psd_dagger_swapped"), _lowner_antitone((1, 2, 3))),
    Claim("lowner_antitone_13_2", "PSD: A ≤ B and trivially meeting ranges imply B† ≤ A†",
          ("psd_lowner_equal_range", "mixed_psd", "psd_dagger_swapped"), _lowner_antitone((1, 3, 2))),
    Claim("lowner_antitone_23_1", "PSD: B† ≤ A† and trivially meeting ranges imply A ≤ B",
          ("psd_lowner_equal_range", "mixed_psd", "psd_dagger_swapped"), _lowner_antitone((2, 3, 1))),
    Claim("lowner_star_monotone", "Hermitian: A ≤ B and A ≤* B iff A† ≤ B† and A† ≤* B†",
          ("hermitian_star_lowner", "hermitian_minus_pair", "commuting_hermitian", "mixed_psd"),
          _lowner_star_monotone),
    Claim("sharp_range_characterization",
          "sharp order iff R(B) = R(A) ∔ R(B−A), A(B−A) = 0 and (B−A)A = 0",
          ("sharp_pair", "sharp_below_hermitian", "minus_pair", "unstructured"), _sharp_range_char),
    Claim("ep_star_iff_sharp", "A EP, B group invertible: star iff sharp",
          ("ep_star_pair", "sharp_below_hermitian", "ep_same_range", "sharp_pair"), _ep_star_iff_sharp),
    Claim("rdsp_invertible_witnesses", "range dagger subtractivity yields invertible factor witnesses",
          ("rdsp_diagonal", "star_pair", "minus_pair"), _witnesses),
    Claim("greville_iff_rol", "reverse order law iff both Greville range inclusions",
          ("unstructured", "ep_same_range", "commuting_hermitian", "star_pair", "minus_pair", "ep_triple"),
          _greville_iff_rol),
    Claim("rol_a_ep_triple", "A, B, AB EP with R(A) = R(AB) imply the reverse order law",
          ("ep_triple",), _rol_condition("a_ep_triple")),
    Claim("rol_b_commuting_hermitian", "commuting Hermitian A, B satisfy the reverse order law",
          ("commuting_hermitian",), _rol_condition("b_commuting_hermitian")),
    Claim("rol_c_lowner_antitone", "PSD, A ≤ B and B† ≤ A† imply the reverse order law both ways",
          ("psd_lowner_equal_range",), _rol_condition("c_lowner_antitone")),
    Claim("rol_d_ep_star", "A EP and A ≤* B imply the reverse order law and A = P_A B",
          ("ep_star_pair",), _rol_condition("d_ep_star")),
    Claim("rol_d_ep_star_converse", "A EP, reverse order law and A = P_A B imply A ≤* B",
          ("ep_star_pair", "ep_same_range"), _rol_condition("d_ep_star_converse")),
    Claim("rol_e_star_hermitian", "B Hermitian and A ≤* B imply the reverse order law",
          ("star_below_hermitian",), _rol_condition("e_star_hermitian")),
    Claim("rol_f_sharp_ep_hermitian", "A EP, B Hermitian and A ≤# B imply the reverse order law",
          ("sharp_below_hermitian",), _rol_condition("f_sharp_ep_hermitian")),
    Claim("rol_g_preorder_ep", "A Hermitian, A ≤s B and B†AB EP imply the reverse order law",
          ("preorder_ep",), _rol_condition("g_preorder_ep")),
    Claim("ab_class_123", "A, B EP with R(A) ⊆ R(B): B†A† is a {1,2,3}-inverse of AB",
          ("ep_same_range",), _ab_class),
    Claim("m_lemma_forward", "M R(T) ⊆ R(T) implies T† is an M-inverse of T",
          ("m_lemma_pair",), _m_lemma(True)),
    Claim("m_lemma_converse", "T† an M-inverse of T implies M R(T) ⊆ R(T)",
          ("m_lemma_pair",), _m_lemma(False)),
    # T*MT = BA³B here, so its kernel is only resolvable for mild spectra
    Claim("m_inverse_parametric", "A-inverses of AB for commuting Hermitian A, B (A PSD) are B†A† + Z, R(Z) ⊆ N(AB)",
          ("commuting_hermitian_narrow",), _m_inverse_parametric),
    Claim("im_weighted", "B†A† is an I,M-weighted inverse of AB, R(M₂) ⊆ N(A(B*)†)",
          ("ep_same_range", "ep_hermitian_same_range"), _im_weighted(False)),
    Claim("im_weighted_statement_form", "same with R(M₂) ⊆ N(AB†), B Hermitian",
          ("ep_hermitian_same_range",), _im_weighted(True)),
    Claim("ib2_weighted", "A EP, B Hermitian, R(A) ⊆ R(B): B†A† is an I,B²-weighted inverse of AB",
          ("ep_hermitian_same_range",), _ib2_weighted),
    Claim("pw_p2_oracle", "B†A† attains the p=2 weighted least-squares minimum",
          ("pwproblem_instance",), _pw_p2),
    Claim("pw_p2_commuting", "p=2 weighted least squares, B sharing the eigenbasis of A",
          ("pw_commuting",), _pw_p2),
    Claim("pw_p2_equal_range", "p=2 weighted least squares, R(B) = R(A)",
          ("pw_equal_range",), _pw_p2),
    # implications used by the fuzzer
    Claim("minus_implies_star", "minus order implies star order (false)",
          ("minus_pair", "unstructured"), _implies("minus", "star"), in_suite=False),
    Claim("star_implies_minus", "star order implies minus order",
          ("star_pair", "unstructured"), _implies("star", "minus"), in_suite=False),
    Claim("diamond_implies_rol_hermitian_b", "diamond order with B Hermitian implies the reverse order law (false)",
          ("hermitian_diamond_pair", "diamond_pair"), _implies("diamond", "rol", hermitian_b=True),
          in_suite=False),
]

CLAIMS: dict[str, Claim] = {c.id: c for c in _CLAIMS}
SUITE_CLAIMS: tuple[str, ...] = tuple(c.id for c in _CLAIMS if c.in_suite)

# Claims whose exercised count hinges on diamond-but-not-star pairs, which
# the generators cannot synthesize directly.
DIAMOND_DEPENDENT: frozenset[str] = frozenset({
    "minus_iff_diamond_under_rdsp",
    "diamond_dagger_monotone_under_rdsp",
    "star_iff_diamond_and_cross_hermitian",
})


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}") from None

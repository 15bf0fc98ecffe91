"""Seeded random matrix pairs, one family per theorem hypothesis.

Every generator builds its pair constructively, then checks the family's
defining predicate before returning it; a failed check (a draw that landed
on a tolerance boundary) is redrawn from a derived seed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import orders, subtractivity
from .inverses import is_ep, moore_penrose
from .linalg import (
    DEFAULT_TOL,
    LinalgError,
    TolerancePolicy,
    adj,
    predicates,
    product,
    rel_residual,
    subspace_relate,
)
from .weighted import HypothesisError, _check_pw_hypotheses

# Rank cutoff and equality tolerance used for randomly generated instances.
# Differences such as B - A carry absolute roundoff of order eps*|B|, which
# relative to a small |B - A| can reach 1e-12; the machine-epsilon default
# cutoff would count that noise as rank.
SUITE_TOL = TolerancePolicy(rank_rel=1e-12, eq_rel=1e-7, psd_rel=1e-9)

SV_LOG10_RANGE = (-2.0, 2.0)


class GeneratorKind(str, enum.Enum):
    STAR_PAIR = "star_pair"
    MINUS_PAIR = "minus_pair"
    SHARP_PAIR = "sharp_pair"
    DIAMOND_PAIR = "diamond_pair"
    COMMUTING_HERMITIAN = "commuting_hermitian"
    EP_SAME_RANGE = "ep_same_range"
    EP_TRIPLE = "ep_triple"
    PSD_LOWNER_EQUAL_RANGE = "psd_lowner_equal_range"
    HERMITIAN_STAR_LOWNER = "hermitian_star_lowner"
    RDSP_DIAGONAL = "rdsp_diagonal"
    PWPROBLEM_INSTANCE = "pwproblem_instance"
    UNSTRUCTURED = "unstructured"


class GenerationError(LinalgError):
    def __init__(self, kind: str, attempts: int):
        super().__init__(f"could not generate a valid {kind} pair in {attempts} attempts")
        self.kind = kind
        self.attempts = attempts


@dataclass
class GeneratedPair:
    a: np.ndarray
    b: np.ndarray
    kind: str
    dim: int
    seed: object
    weight: np.ndarray | None = None
    extras: dict = field(default_factory=dict)

    def __iter__(self) -> Iterator[np.ndarray]:
        yield self.a
        yield self.b


# ---------------------------------------------------------------- primitives

def _cgauss(rng, *shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def unitary(rng, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_cgauss(rng, n, n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def singular_values(rng, k: int, log10_range: tuple[float, float] = SV_LOG10_RANGE) -> np.ndarray:
    lo, hi = log10_range
    return 10.0 ** rng.uniform(lo, hi, size=k)


def oblique_basis(rng, n: int, max_cond: float = 1e2) -> np.ndarray:
    """Random invertible matrix with unit columns and bounded condition number."""
    while True:
        x = _cgauss(rng, n, n)
        x /= np.linalg.norm(x, axis=0)
        if np.linalg.cond(x) <= max_cond:
            return x


def _invertible(rng, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((0, 0), complex)
    return unitary(rng, k) @ np.diag(singular_values(rng, k)) @ adj(unitary(rng, k))


def _real_spectrum(rng, k: int, zero_prob: float = 0.3, signed: bool = True,
                   log10_range: tuple[float, float] = SV_LOG10_RANGE) -> np.ndarray:
    vals = singular_values(rng, k, log10_range)
    if signed:
        vals = vals * rng.choice([-1.0, 1.0], size=k)
    vals[rng.random(k) < zero_prob] = 0.0
    return vals


def _rank_profile(rng, n: int, min_a: int = 1) -> tuple[int, int]:
    """(rank A, rank B−A) drawn uniformly over feasible combinations."""
    options = [(ra, rd) for ra in range(min_a, n + 1) for rd in range(0, n - ra + 1)]
    return options[rng.integers(len(options))]


def _low_rank(u_cols: np.ndarray, s: np.ndarray, v_cols: np.ndarray) -> np.ndarray:
    return (u_cols * s) @ adj(v_cols)


# ---------------------------------------------------------------- families

def _star_pair(rng, n):
    ra, rd = _rank_profile(rng, n)
    u, v = unitary(rng, n), unitary(rng, n)
    a = _low_rank(u[:, :ra], singular_values(rng, ra), v[:, :ra])
    d = _low_rank(u[:, ra:ra + rd], singular_values(rng, rd), v[:, ra:ra + rd])
    return a, a + d


def _minus_pair(rng, n):
    ra, rd = _rank_profile(rng, n)
    x, y = oblique_basis(rng, n), oblique_basis(rng, n)
    a = _low_rank(x[:, :ra], singular_values(rng, ra), y[:, :ra])
    d = _low_rank(x[:, ra:ra + rd], singular_values(rng, rd), y[:, ra:ra + rd])
    return a, a + d


def _hermitian_minus_pair(rng, n):
    ra, rd = _rank_profile(rng, n)
    x = oblique_basis(rng, n)
    a = _low_rank(x[:, :ra], _real_spectrum(rng, ra, 0.0), x[:, :ra])
    d = _low_rank(x[:, ra:ra + rd], _real_spectrum(rng, rd, 0.0), x[:, ra:ra + rd])
    return a, a + d


def _group_invertible_block(rng, k):
    if k == 0:
        return np.zeros((0, 0), complex)
    t = oblique_basis(rng, k)
    d = singular_values(rng, k) * np.exp(2j * np.pi * rng.random(k))
    d[rng.random(k) < 0.4] = 0.0
    return t @ np.diag(d) @ np.linalg.inv(t)


def _sharp_pair(rng, n):
    r1 = int(rng.integers(1, n + 1))
    s = oblique_basis(rng, n)
    s_inv = np.linalg.inv(s)
    j1 = _invertible(rng, r1)
    j2 = _group_invertible_block(rng, n - r1)
    b_core = np.zeros((n, n), complex)
    b_core[:r1, :r1] = j1
    b_core[r1:, r1:] = j2
    a_core = np.zeros((n, n), complex)
    a_core[:r1, :r1] = j1
    return s @ a_core @ s_inv, s @ b_core @ s_inv


def _diamond_pair(rng, n, hermitian: bool = False):
    c, d = _hermitian_minus_pair(rng, n) if hermitian else _minus_pair(rng, n)
    # A ≤⋄ B exactly when A† ≤− B†, so invert a minus-ordered pair
    return moore_penrose(c, SUITE_TOL), moore_penrose(d, SUITE_TOL)


def _commuting_hermitian(rng, n, log10_range=SV_LOG10_RANGE):
    u = unitary(rng, n)
    a = _low_rank(u, _real_spectrum(rng, n, log10_range=log10_range), u)
    b = _low_rank(u, _real_spectrum(rng, n, log10_range=log10_range), u)
    return a, b


def _psd_factor(rng, n, r):
    """``C`` with ``n x r`` orthonormal-times-diagonal form such that ``CC*``
    has eigenvalues drawn like singular values."""
    return unitary(rng, n)[:, :r] * np.sqrt(singular_values(rng, r))


def _ep_matrix(u_cols, rng):
    k = u_cols.shape[1]
    return u_cols @ _invertible(rng, k) @ adj(u_cols)


def _ep_same_range(rng, n):
    rb = int(rng.integers(1, n + 1))
    ra = int(rng.integers(1, rb + 1))
    u = unitary(rng, n)
    return _ep_matrix(u[:, :ra], rng), _ep_matrix(u[:, :rb], rng)


def _ep_triple(rng, n):
    r = int(rng.integers(1, n + 1))
    u = unitary(rng, n)
    a = _ep_matrix(u[:, :r], rng)
    core = np.zeros((n, n), complex)
    core[:r, :r] = _invertible(rng, r)
    m = n - r
    if m:
        if rng.random() < 0.5:
            core[r:, r:] = _invertible(rng, m)
            core[r:, :r] = _cgauss(rng, m, r) * 10.0 ** rng.uniform(-1, 1)
        else:
            k = int(rng.integers(0, m + 1))
            w = unitary(rng, m)[:, :k]
            core[r:, r:] = _ep_matrix(w, rng) if k else 0.0
    return a, u @ core @ adj(u)


def _psd_lowner_equal_range(rng, n):
    r = int(rng.integers(1, n + 1))
    c = _psd_factor(rng, n, r)
    k = int(rng.integers(1, r + 1))
    g = _cgauss(rng, r, k)
    d = c @ g * (10.0 ** rng.uniform(-1, 0) / np.linalg.norm(g, 2))
    a = c @ adj(c)
    return a, a + d @ adj(d)


def _hermitian_star_lowner(rng, n):
    ra, rd = _rank_profile(rng, n)
    u = unitary(rng, n)
    a = _low_rank(u[:, :ra], _real_spectrum(rng, ra, 0.0), u[:, :ra])
    gap = _low_rank(u[:, ra:ra + rd], singular_values(rng, rd), u[:, ra:ra + rd])
    return a, a + gap


def _rdsp_diagonal(rng, n):
    b = singular_values(rng, n) * np.exp(2j * np.pi * rng.random(n))
    b[rng.random(n) < 0.25] = 0.0
    a = np.where(rng.random(n) < 0.5, b, 0.0)
    if rng.random() < 0.5:
        j = int(rng.integers(n))
        a[j] = singular_values(rng, 1)[0] * np.exp(2j * np.pi * rng.random())
    u = unitary(rng, n)
    return (u * a) @ adj(u), (u * b) @ adj(u)


def _poly_weight(rng, u, lam):
    deg = int(rng.integers(1, 4))
    coeffs = 10.0 ** rng.uniform(-1, 1, size=deg + 1)
    return (u * sum(c * lam**k for k, c in enumerate(coeffs))) @ adj(u)


def _pwproblem(rng, n):
    u = unitary(rng, n)
    lam = singular_values(rng, n)
    a = (u * lam) @ adj(u)
    v = unitary(rng, n)
    beta = _real_spectrum(rng, n, zero_prob=0.3)
    beta[int(rng.integers(n))] = 0.0
    return a, (v * beta) @ adj(v), _poly_weight(rng, u, lam)


def _pw_commuting(rng, n):
    """pwproblem instance with B sharing the eigenbasis of A."""
    u = unitary(rng, n)
    lam = singular_values(rng, n)
    beta = _real_spectrum(rng, n, zero_prob=0.3)
    beta[int(rng.integers(n))] = 0.0
    return (u * lam) @ adj(u), (u * beta) @ adj(u), _poly_weight(rng, u, lam)


def _pw_equal_range(rng, n):
    """pwproblem instance with A PSD possibly singular and R(B) = R(A)."""
    u = unitary(rng, n)
    r = int(rng.integers(1, n + 1))
    lam = np.zeros(n)
    lam[:r] = singular_values(rng, r)
    k = _real_spectrum(rng, r, zero_prob=0.0)
    core = unitary(rng, r)
    b = u[:, :r] @ ((core * k) @ adj(core)) @ adj(u[:, :r])
    w = _poly_weight(rng, u, lam)
    return (u * lam) @ adj(u), b, w


def _unstructured(rng, n):
    def one():
        r = int(rng.integers(0, n + 1))
        u, v = unitary(rng, n), unitary(rng, n)
        return _low_rank(u[:, :r], singular_values(rng, r), v[:, :r])
    return one(), one()


# auxiliary families used by individual claims ------------------------------

def _ep_star_pair(rng, n):
    """A EP and A ≤* B."""
    ra, rd = _rank_profile(rng, n)
    u, v = unitary(rng, n), unitary(rng, n)
    a = _ep_matrix(u[:, :ra], rng)
    # the gap must avoid R(A) on both sides
    comp = u[:, ra:]
    v_comp = comp @ unitary(rng, n - ra) if n - ra else comp
    d = _low_rank(comp[:, :rd], singular_values(rng, rd), v_comp[:, :rd])
    del v
    return a, a + d


def _ep_hermitian_same_range(rng, n):
    """A EP, B Hermitian, R(A) ⊆ R(B)."""
    rb = int(rng.integers(1, n + 1))
    ra = int(rng.integers(1, rb + 1))
    u = unitary(rng, n)
    ub = u[:, :rb]
    core = unitary(rng, rb)
    b = ub @ ((core * _real_spectrum(rng, rb, 0.0)) @ adj(core)) @ adj(ub)
    return _ep_matrix(u[:, :ra], rng), b


def _psd_dagger_swapped(rng, n):
    """(B†, A†) for an equal-range PSD pair A ≤ B."""
    a, b = _psd_lowner_equal_range(rng, n)
    return moore_penrose(b, SUITE_TOL), moore_penrose(a, SUITE_TOL)


def _spectral_blocks(rng, n, paired: bool):
    """Hermitian B = U diag(λ) U* with, optionally, a ±μ eigenvalue pair."""
    u = unitary(rng, n)
    lam = _real_spectrum(rng, n, zero_prob=0.2)
    if paired and n >= 2:
        lam[1] = -lam[0] if lam[0] != 0 else lam[1]
    return u, lam


def _star_below_hermitian(rng, n):
    """B Hermitian and A = PB with P a projector commuting with B²."""
    u, lam = _spectral_blocks(rng, n, paired=rng.random() < 0.5)
    b = (u * lam) @ adj(u)
    mags = np.round(np.abs(lam), 12)
    cols = []
    for m in np.unique(mags):
        idx = np.flatnonzero(mags == m)
        if m == 0 or rng.random() < 0.5:
            continue
        block = u[:, idx]
        k = int(rng.integers(1, idx.size + 1))
        cols.append(block @ unitary(rng, idx.size)[:, :k])
    if not cols:
        return np.zeros_like(b), b
    q = np.hstack(cols)
    return q @ adj(q) @ b, b


def _sharp_below_hermitian(rng, n):
    """B Hermitian and A = PB with P a spectral projector of B (so A is EP)."""
    u, lam = _spectral_blocks(rng, n, paired=False)
    keep = (rng.random(n) < 0.5) & (lam != 0)
    if not keep.any():
        nz = np.flatnonzero(lam != 0)
        if nz.size:
            keep[nz[0]] = True
    b = (u * lam) @ adj(u)
    a = (u * np.where(keep, lam, 0.0)) @ adj(u)
    return a, b


def _preorder_ep(rng, n):
    """A Hermitian, B with BB* leaving R(A) invariant, so B†AB is EP."""
    r = int(rng.integers(1, n + 1))
    u = unitary(rng, n)
    a = _low_rank(u[:, :r], _real_spectrum(rng, r, 0.0), u[:, :r])
    s_core = np.zeros((n, n), complex)
    s_core[:r, :r] = _invertible(rng, r)
    m = n - r
    if m:
        k = int(rng.integers(0, m + 1))
        w = unitary(rng, m)
        s_core[r:, r:] = _low_rank(w[:, :k], singular_values(rng, k), unitary(rng, m)[:, :k])
    s = u @ s_core @ adj(u)
    if m and np.linalg.matrix_rank(s_core[r:, r:]) < m:
        # singular B: keep R(B*) ⊇ R(A) by using a unitary factor that fixes R(A)
        v = u @ _block_unitary(rng, r, m) @ adj(u)
    else:
        v = unitary(rng, n)
    return a, s @ v


def _block_unitary(rng, r, m):
    out = np.zeros((r + m, r + m), complex)
    out[:r, :r] = unitary(rng, r)
    if m:
        out[r:, r:] = unitary(rng, m)
    return out


def _m_lemma_pair(rng, n):
    """(T, M): half the time M leaves R(T) invariant."""
    r = int(rng.integers(1, n + 1))
    u = unitary(rng, n)
    t = _low_rank(u[:, :r], singular_values(rng, r), unitary(rng, n)[:, :r])
    if rng.random() < 0.5:
        g1 = _cgauss(rng, r, r)
        g2 = _cgauss(rng, n - r, n - r)
        core = np.zeros((n, n), complex)
        core[:r, :r] = g1 @ adj(g1)
        core[r:, r:] = g2 @ adj(g2)
        m = u @ core @ adj(u)
    else:
        g = _cgauss(rng, n, int(rng.integers(1, n + 1)))
        m = g @ adj(g)
    return t, m


def _mixed_psd(rng, n):
    """PSD pairs of independent random ranges (mostly unordered)."""
    def psd():
        c = _psd_factor(rng, n, int(rng.integers(1, n + 1)))
        return c @ adj(c)
    if rng.random() < 0.5:
        a = psd()
        return a, a + psd()
    return psd(), psd()


# ---------------------------------------------------------------- predicates

def _is_commuting_hermitian(a, b, tol):
    return (predicates(a, tol).hermitian and predicates(b, tol).hermitian
            and rel_residual(a @ b, b @ a) <= tol.eq_rel)


def _pw_ok(a, b, w, tol):
    try:
        _check_pw_hypotheses(a, b, w, tol)
    except HypothesisError:
        return False
    return True


_FAMILIES: dict[str, tuple[Callable, Callable]] = {
    "star_pair": (_star_pair, lambda a, b, t: orders.holds("star", a, b, t).holds),
    "minus_pair": (_minus_pair, lambda a, b, t: orders.holds("minus", a, b, t).holds),
    "sharp_pair": (_sharp_pair, lambda a, b, t: orders.holds("sharp", a, b, t).holds),
    "diamond_pair": (_diamond_pair, lambda a, b, t: orders.holds("diamond", a, b, t).holds),
    "commuting_hermitian": (_commuting_hermitian, _is_commuting_hermitian),
    "ep_same_range": (
        _ep_same_range,
        lambda a, b, t: is_ep(a, t) and is_ep(b, t) and subspace_relate(a, b, t).a_in_b,
    ),
    "ep_triple": (
        _ep_triple,
        lambda a, b, t: is_ep(a, t) and is_ep(b, t) and is_ep(product(a, b, tol=t), t)
        and subspace_relate(a, product(a, b, tol=t), t).equal,
    ),
    "psd_lowner_equal_range": (
        _psd_lowner_equal_range,
        lambda a, b, t: predicates(a, t).psd and orders.holds("lowner", a, b, t).holds
        and subspace_relate(a, b, t).equal,
    ),
    "hermitian_star_lowner": (
        _hermitian_star_lowner,
        lambda a, b, t: orders.holds("star", a, b, t).holds
        and orders.holds("lowner", a, b, t).holds,
    ),
    "rdsp_diagonal": (_rdsp_diagonal, lambda a, b, t: subtractivity.check(a, b, t).rdsp),
    "unstructured": (_unstructured, lambda a, b, t: True),
    # auxiliary families
    "hermitian_minus_pair": (
        _hermitian_minus_pair,
        lambda a, b, t: orders.holds("minus", a, b, t).holds and predicates(b, t).hermitian,
    ),
    "hermitian_diamond_pair": (
        lambda rng, n: _diamond_pair(rng, n, hermitian=True),
        lambda a, b, t: orders.holds("diamond", a, b, t).holds and predicates(b, t).hermitian,
    ),
    "ep_star_pair": (
        _ep_star_pair,
        lambda a, b, t: is_ep(a, t) and orders.holds("star", a, b, t).holds,
    ),
    "star_below_hermitian": (
        _star_below_hermitian,
        lambda a, b, t: predicates(b, t).hermitian and orders.holds("star", a, b, t).holds,
    ),
    "sharp_below_hermitian": (
        _sharp_below_hermitian,
        lambda a, b, t: is_ep(a, t) and predicates(b, t).hermitian
        and orders.holds("sharp", a, b, t).holds,
    ),
    "preorder_ep": (
        _preorder_ep,
        lambda a, b, t: predicates(a, t).hermitian and orders.holds("space", a, b, t).holds
        and is_ep(product(moore_penrose(b, t), a, b, tol=t), t),
    ),
    "ep_hermitian_same_range": (
        _ep_hermitian_same_range,
        lambda a, b, t: is_ep(a, t) and predicates(b, t).hermitian
        and subspace_relate(a, b, t).a_in_b,
    ),
    "psd_dagger_swapped": (
        _psd_dagger_swapped,
        lambda a, b, t: predicates(a, t).psd and predicates(b, t).psd
        and subspace_relate(a, b, t).equal
        and orders.holds("lowner", moore_penrose(b, t), moore_penrose(a, t), t).holds,
    ),
    "commuting_hermitian_narrow": (
        lambda rng, n: _commuting_hermitian(rng, n, log10_range=(-0.5, 0.5)),
        _is_commuting_hermitian,
    ),
    "m_lemma_pair": (_m_lemma_pair, lambda a, b, t: predicates(b, t).psd),
    "mixed_psd": (_mixed_psd, lambda a, b, t: predicates(a, t).psd and predicates(b, t).psd),
}

_WEIGHTED_FAMILIES: dict[str, Callable] = {
    "pwproblem_instance": _pwproblem,
    "pw_commuting": _pw_commuting,
    "pw_equal_range": _pw_equal_range,
}

FAMILIES = tuple(_FAMILIES) + tuple(_WEIGHTED_FAMILIES)
MAX_ATTEMPTS = 50


def _verified(kind, a, b, w, tols) -> bool:
    if kind in _WEIGHTED_FAMILIES:
        return all(_pw_ok(a, b, w, t) for t in tols)
    check = _FAMILIES[kind][1]
    return all(check(a, b, t) for t in tols)


def generate(kind: GeneratorKind | str, dim: int, seed, tol: TolerancePolicy | None = None,
             max_attempts: int = MAX_ATTEMPTS) -> GeneratedPair:
    """Draw a pair of the given family at dimension ``dim`` (``>= 2``).

    ``seed`` is anything accepted by :func:`numpy.random.default_rng`.  The
    pair is verified against the family predicate at the default tolerance
    and, when given, at ``tol``; failed draws are redrawn.
    """
    kind = kind.value if isinstance(kind, GeneratorKind) else str(kind)
    if dim < 2:
        raise ValueError("dim must be >= 2")
    if kind not in _FAMILIES and kind not in _WEIGHTED_FAMILIES:
        raise ValueError(f"unknown generator kind {kind!r}")
    tols = (DEFAULT_TOL,) if tol is None or tol == DEFAULT_TOL else (DEFAULT_TOL, tol)
    build = _WEIGHTED_FAMILIES.get(kind) or _FAMILIES[kind][0]
    for attempt in range(max_attempts):
        rng = np.random.default_rng(_attempt_seed(seed, attempt))
        out = build(rng, dim)
        a, b = out[0], out[1]
        w = out[2] if len(out) == 3 else None
        if _verified(kind, a, b, w, tols):
            return GeneratedPair(a, b, kind, dim, seed, weight=w)
    raise GenerationError(kind, max_attempts)


def _attempt_seed(seed, attempt: int):
    base = list(seed) if isinstance(seed, (list, tuple)) else [seed]
    return base + [attempt] if attempt else base

"""Independent reference computations used to cross-check the package.

Nothing here calls into ``pseudoinv``; each oracle takes a different route
(LAPACK's pinv, rank additivity, vectorized least squares, ...) from the
code it checks.
"""

import numpy as np


def np_rank(m, cutoff):
    """Number of singular values above an absolute ``cutoff``."""
    s = np.linalg.svd(np.asarray(m, dtype=complex), compute_uv=False)
    return int(np.sum(s > cutoff))


def minus_by_rank_additivity(a, b, rtol=1e-9):
    """Minus order through rank subtractivity, ``rank(B−A) = rank(B) − rank(A)``.

    Space inclusions are checked as ``rank[B A] = rank[B; A] = rank B``.  A
    single absolute cutoff scaled by the larger input norm is used for every
    rank, so the oracle does not share the package's per-matrix cutoffs.
    """
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    cut = rtol * max(np.linalg.norm(a, 2), np.linalg.norm(b, 2), 1e-300)
    ra, rb = np_rank(a, cut), np_rank(b, cut)
    if np_rank(np.hstack([b, a]), cut) != rb or np_rank(np.vstack([b, a]), cut) != rb:
        return False
    return np_rank(b - a, cut) == rb - ra


def pinv_lapack(t):
    return np.linalg.pinv(np.asarray(t, dtype=complex), rcond=1e-12)


def group_inverse_via_cube(t):
    """``T# = T (T³)† T``, valid when the index of ``T`` is at most one."""
    t = np.asarray(t, dtype=complex)
    return t @ pinv_lapack(t @ t @ t) @ t


def lsq_min_vectorized(a, b, w):
    """``min_Y ‖S(ABY − P_A)‖_F`` with ``S = (WA)^{1/2}``, column by column via lstsq."""
    wa = w @ a
    lam, q = np.linalg.eigh(0.5 * (wa + wa.conj().T))
    s = (q * np.sqrt(np.clip(lam, 0, None))) @ q.conj().T
    pa = a @ pinv_lapack(a)
    sab = s @ a @ b
    # roundoff in SAB scales with the factor norms, not with σ_max(SAB)
    cut = 1e-12 * np.linalg.norm(s, 2) * np.linalg.norm(a, 2) * np.linalg.norm(b, 2)
    u, sv, vh = np.linalg.svd(sab)
    keep = sv > cut
    y = vh[keep].conj().T @ ((u[:, keep].conj().T @ (s @ pa)) / sv[keep, None])
    return float(np.linalg.norm(sab @ y - s @ pa))


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import np_rank
from pseudoinv import orders
from pseudoinv.generators import (
    DEFAULT_TOL,
    FAMILIES,
    GenerationError,
    SUITE_TOL,
    GeneratorKind,
    _verified,
    generate,
)
from pseudoinv.linalg import adj, rel_residual
from pseudoinv.rol import rol_check

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 6)


@pytest.mark.parametrize("kind", FAMILIES)
def test_every_family_is_sound_at_default_tolerance(kind):
    for seed in range(15):
        for n in (2, 3, 5):
            g = generate(kind, n, seed)
            assert g.a.shape == g.b.shape == (n, n)
            assert _verified(kind, g.a, g.b, g.weight, (DEFAULT_TOL,)), (kind, n, seed)


@pytest.mark.parametrize("kind", [GeneratorKind.STAR_PAIR, "star_pair"])
def test_kind_accepts_enum_or_string(kind):
    g = generate(kind, 4, 1)
    assert g.kind == "star_pair" and orders.holds("star", g.a, g.b).holds


def test_determinism():
    one, two = generate("minus_pair", 5, [3, 9]), generate("minus_pair", 5, [3, 9])
    np.testing.assert_array_equal(one.a, two.a)
    np.testing.assert_array_equal(one.b, two.b)
    assert not np.array_equal(one.a, generate("minus_pair", 5, [3, 10]).a)


def test_invalid_requests():
    with pytest.raises(ValueError, match="dim"):
        generate("star_pair", 1, 0)
    with pytest.raises(ValueError, match="unknown"):
        generate("no_such_family", 3, 0)


def test_budget_exhausted_reports_attempts():
    with pytest.raises(GenerationError) as exc:
        generate("ep_triple", 3, 0, max_attempts=0)
    assert exc.value.attempts == 0 and "ep_triple" in str(exc.value)


@given(seeds)
def test_star_pair_example(seed):
    a, b = generate("star_pair", 4, seed)
    assert orders.holds("star", a, b).holds


@given(dims, seeds)
def test_sharp_pair_square_identities(n, seed):
    a, b = generate("sharp_pair", n, seed)
    assert rel_residual(a @ a, a @ b) <= 1e-9 and rel_residual(a @ a, b @ a) <= 1e-9


@given(seeds)
def test_commuting_hermitian_satisfies_rol(seed):
    a, b = generate("commuting_hermitian", 3, seed)
    assert rol_check(a, b, SUITE_TOL, conditions=False).rol_holds
    strict = rol_check(a, b, conditions=False)
    assert strict.rol_holds or strict.marginal


@given(dims, seeds)
def test_rdsp_diagonal_is_simultaneously_diagonalizable(n, seed):
    # a unitary rotation of a diagonal pair: normal and commuting
    a, b = generate("rdsp_diagonal", n, seed)
    for m in (a, b):
        assert rel_residual(m @ adj(m), adj(m) @ m) <= 1e-12
    assert rel_residual(a @ b, b @ a) <= 1e-12


@given(dims, seeds)
def test_pwproblem_hypotheses(n, seed):
    g = generate("pwproblem_instance", n, seed)
    a, b, w = g.a, g.b, g.weight
    assert rel_residual(a, adj(a)) <= 1e-12 and np.linalg.eigvalsh(a).min() > 0
    assert rel_residual(b, adj(b)) <= 1e-12
    cut = 1e-9 * np.linalg.norm(b, 2)
    assert np_rank(b, cut) < n
    # W = q(A) commutes with A and is positive definite
    assert rel_residual(w @ a, a @ w) <= 1e-9
    assert np.linalg.eigvalsh(0.5 * (w + adj(w))).min() > 0


@given(dims, seeds)
def test_singular_values_stay_in_band(n, seed):
    a, b = generate("star_pair", n, seed)
    s = np.linalg.svd(b, compute_uv=False)
    nz = s[s > 1e-8]
    assert nz.size and nz.min() >= 1e-2 * (1 - 1e-9) and nz.max() <= 1e2 * (1 + 1e-9)

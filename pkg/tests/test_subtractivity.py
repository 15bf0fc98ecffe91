import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pseudoinv import orders, subtractivity
from pseudoinv.generators import SUITE_TOL, generate
from pseudoinv.inverses import moore_penrose
from pseudoinv.linalg import ShapeError, adj, rel_residual

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 6)


def test_dsp_example():
    v = subtractivity.check([[1, 0], [1, 0]], [[1, 1], [1, -1]])
    assert v.dsp and v.rdsp


def test_rdsp_without_dsp():
    v = subtractivity.check(np.diag([2.0, 0]), np.diag([1.0, 2]))
    assert not v.dsp and v.rdsp


def test_equal_pair_is_dsp():
    a = np.array([[1.0, 2], [3, 4]])
    assert subtractivity.check(a, a).dsp


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        subtractivity.check(np.eye(2), np.eye(3))


def _assert_witnesses(a, b, x, y):
    d, e = moore_penrose(b) - moore_penrose(a), adj(b) - adj(a)
    d2 = moore_penrose(adj(b)) - moore_penrose(adj(a))
    assert rel_residual(d @ x, e) <= 1e-9
    assert rel_residual(d2 @ y, b - a) <= 1e-9
    for m in (x, y):
        s = np.linalg.svd(m, compute_uv=False)
        assert s[-1] > 1e-12 * s[0]


def test_witnesses_diagonal_pair():
    a, b = np.diag([2.0, 0]), np.diag([1.0, 2])
    _assert_witnesses(a, b, *subtractivity.invertible_factor_witnesses(a, b))


def test_witnesses_zero_and_invertible_hermitian():
    b = np.array([[2.0, 1], [1, 3]])
    x, y = subtractivity.invertible_factor_witnesses(np.zeros((2, 2)), b)
    np.testing.assert_allclose(x, b @ adj(b), atol=1e-12)
    _assert_witnesses(np.zeros((2, 2)), b, x, y)


def test_witnesses_absent_without_rdsp():
    for seed in range(200):
        a, b = generate("minus_pair", 3, [7, seed])
        if not subtractivity.check(a, b).rdsp:
            assert subtractivity.invertible_factor_witnesses(a, b) is None
            return
    pytest.fail("no rdsp-failing pair among 200 minus-pair draws")


@given(dims, seeds)
def test_star_implies_dsp(n, seed):
    a, b = generate("star_pair", n, seed)
    v = subtractivity.check(a, b, SUITE_TOL)
    assert v.dsp or v.marginal


@given(dims, seeds, st.sampled_from(["star_pair", "minus_pair", "unstructured"]))
def test_dsp_implies_rdsp(n, seed, kind):
    a, b = generate(kind, n, seed)
    v = subtractivity.check(a, b, SUITE_TOL)
    assert not v.dsp or v.rdsp or v.marginal


@given(dims, seeds)
def test_diagonal_pairs_are_rdsp_with_witnesses(n, seed):
    a, b = generate("rdsp_diagonal", n, seed)
    assert subtractivity.check(a, b, SUITE_TOL).rdsp
    w = subtractivity.invertible_factor_witnesses(a, b, SUITE_TOL)
    assert w is not None


@given(dims, seeds, st.sampled_from(["star_pair", "minus_pair"]))
def test_star_iff_minus_and_dsp(n, seed, kind):
    a, b = generate(kind, n, seed)
    s = orders.holds("star", a, b, SUITE_TOL)
    m = orders.holds("minus", a, b, SUITE_TOL)
    v = subtractivity.check(a, b, SUITE_TOL)
    if not (s.marginal or m.marginal or v.marginal):
        assert s.holds == (m.holds and v.dsp)


def test_verdict_round_trip():
    v = subtractivity.check(np.diag([2.0, 0]), np.diag([1.0, 2]))
    j = v.to_json()
    assert subtractivity.SubtractivityVerdict.from_json(j).to_json() == j

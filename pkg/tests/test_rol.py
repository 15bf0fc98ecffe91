import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pseudoinv.generators import SUITE_TOL, generate
from pseudoinv.inverses import moore_penrose
from pseudoinv.linalg import ShapeError
from pseudoinv.rol import RolReport, ab_class_membership, rol_check, sufficient_conditions

A3 = np.array([[1, 1, 0], [1, 1, 0], [0, 0, 0]], dtype=float)
B3 = np.array([[1, 1, 0], [1, 1, 1], [0, 1, 1]], dtype=float)
MINUS_A, MINUS_B = np.array([[1.0, 0], [1, 0]]), np.array([[1.0, 1], [1, 0]])

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 6)


def _rows(a, b):
    return {c.name: c for c in sufficient_conditions(a, b)}


def test_rol_fails_for_minus_pair():
    r = rol_check(MINUS_A, MINUS_B)
    assert not r.rol_holds
    np.testing.assert_allclose(r.ab_pinv, 0.25 * np.ones((2, 2)), atol=1e-12)


def test_rol_holds_without_dsp():
    assert rol_check(np.diag([1.0, 0]), [[1, 1], [1, -1]]).rol_holds


def test_commuting_diagonal():
    r = rol_check(np.diag([1.0, 0, 3]), np.diag([2.0, 5, 0]))
    assert r.rol_holds and r.greville


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        rol_check(np.eye(2), np.eye(3))


def test_condition_a_example():
    row = _rows(np.diag([1.0, 0]), np.eye(2))["a_ep_triple"]
    assert row.hypothesis_holds and row.conclusion_holds


def test_condition_a_counterexample():
    # A, B, AB EP and R(A) = R(AB), yet (AB)† ≠ B†A†
    a, b = np.diag([1.0, 0]), np.array([[1.0, 0], [1, 1]])
    row = _rows(a, b)["a_ep_triple"]
    assert row.hypothesis_holds and not row.conclusion_holds
    r = rol_check(a, b)
    np.testing.assert_allclose(r.ab_pinv, np.diag([1.0, 0]), atol=1e-12)
    np.testing.assert_allclose(r.b_pinv_a_pinv, [[1, 0], [-1, 0]], atol=1e-12)
    assert not r.greville


def test_condition_e_diamond_pair():
    row = _rows(A3, B3)["e_star_hermitian"]
    assert not row.hypothesis_holds
    assert not rol_check(A3, B3).rol_holds


def test_equal_hermitian_invertible():
    a = np.array([[2.0, 1], [1, 3]])
    rows = _rows(a, a)
    for name in ("b_commuting_hermitian", "e_star_hermitian"):
        assert rows[name].hypothesis_holds and rows[name].conclusion_holds


def test_all_seven_conditions_present():
    names = [c.name for c in sufficient_conditions(np.eye(2), np.eye(2))]
    assert [n[0] for n in names if not n.endswith("converse")] == list("abcdefg")


def test_ab_class_examples():
    assert not ab_class_membership(MINUS_A, MINUS_B).contains(3, 4)
    a = np.array([[1.0, 2], [2, 1]])
    b = moore_penrose(a)
    assert ab_class_membership(a, b).satisfied == {1, 2, 3, 4}


def test_report_round_trip():
    j = rol_check(A3, B3).to_json()
    assert RolReport.from_json(j).to_json() == j


# ---------------------------------------------------------------- properties

@given(dims, seeds, st.sampled_from(["unstructured", "commuting_hermitian", "ep_same_range",
                                      "minus_pair", "star_pair"]))
def test_greville_equivalence(n, seed, kind):
    a, b = generate(kind, n, seed)
    r = rol_check(a, b, SUITE_TOL, conditions=False)
    if not r.marginal:
        assert r.rol_holds == r.greville


@given(dims, seeds)
def test_commuting_hermitian_rol(n, seed):
    a, b = generate("commuting_hermitian", n, seed)
    assert rol_check(a, b, SUITE_TOL, conditions=False).rol_holds


@given(dims, seeds)
def test_ep_range_inclusion_gives_123(n, seed):
    a, b = generate("ep_same_range", n, seed)
    assert ab_class_membership(a, b, SUITE_TOL).contains(1, 2, 3)


@given(dims, seeds, st.sampled_from(["commuting_hermitian", "hermitian_star_lowner",
                                      "psd_lowner_equal_range", "preorder_ep"]))
def test_sound_conditions_never_violated(n, seed, kind):
    # (a) is excluded: its hypothesis does not imply the reverse order law
    a, b = generate(kind, n, seed)
    for row in sufficient_conditions(a, b, SUITE_TOL):
        if row.name != "a_ep_triple" and not row.marginal:
            assert not row.violated, row.name

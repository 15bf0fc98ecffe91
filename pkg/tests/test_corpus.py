import json

import numpy as np
import pytest

from pseudoinv.corpus import (
    FLAGS,
    VALUES,
    CorpusError,
    evaluate_flag,
    evaluate_value,
    load_corpus,
    parse_corpus,
    reproduce,
)

ERRATA = {
    ("dsp_without_cross_hermitian", "b_star_a_hermitian"),
    ("lowner_diamond_not_dagger_lowner", "lowner"),
    ("dsp_without_rol", "rol"),
}


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


def _by_name(corpus, name):
    return next(i for i in corpus if i.name == name)


def test_bundled_corpus_size(corpus):
    assert len(corpus) >= 10
    assert sum(len(i.expected) for i in corpus) >= 30
    assert len({i.name for i in corpus}) == len(corpus)


def test_every_value_reproduces(corpus):
    for inst in corpus:
        for v in reproduce(inst).values:
            assert v.ok(1e-10), (inst.name, v.name, v.max_abs_error)


def test_flags_reproduce_except_errata(corpus):
    for inst in corpus:
        rep = reproduce(inst)
        for f in rep.flags + rep.derived:
            if (inst.name, f.flag) in ERRATA:
                assert not f.ok and f.erratum and f.actual == f.corrected
            else:
                assert f.ok, (inst.name, f.flag, f.expected, f.actual)


def test_errata_are_exactly_the_marked_flags(corpus):
    marked = {(i.name, k) for i in corpus for k in i.errata}
    assert marked == ERRATA
    assert all(reproduce(i).errata_confirmed for i in corpus)


@pytest.mark.parametrize("m, want", [
    ([[1, 1], [1, 1]], [[0.25, 0.25], [0.25, 0.25]]),
    ([[1, 1], [1, 4]], [[4 / 3, -1 / 3], [-1 / 3, 1 / 3]]),
    ([[1, 1, 0], [1, 1, 1], [0, 1, 1]], [[0, 1, -1], [1, -1, 1], [-1, 1, 0]]),
])
def test_headline_inverses(m, want):
    m = np.asarray(m, float)
    got = evaluate_value("pinv_a", m, m)
    assert np.max(np.abs(got - np.asarray(want))) <= 1e-10


def test_minus_pair_product_inverse(corpus):
    inst = _by_name(corpus, "minus_not_rol")
    got = evaluate_value("pinv_ab", inst.a, inst.b)
    assert np.max(np.abs(got - 0.25 * np.ones((2, 2)))) <= 1e-10


def test_ep_triple_counterexample_instance(corpus):
    rep = reproduce(_by_name(corpus, "ep_triple_without_rol"))
    assert rep.ok()
    derived = {f.flag: f.actual for f in rep.derived}
    assert derived["ep_triple_hypothesis"] and not derived["rol"]


def test_empty_file_is_empty_list(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("  \n")
    assert load_corpus(p) == []


def test_parse_error_has_line_context():
    with pytest.raises(CorpusError, match=r"line 2 column"):
        parse_corpus('[\n  {"name": ,}\n]')


def test_malformed_entry_names_instance():
    bad = [{"name": "broken", "a": {"rows": 2, "cols": 2, "entries": [1, 2, 3]},
            "b": {"rows": 1, "cols": 1, "entries": [1]}, "expected": {}}]
    with pytest.raises(CorpusError, match="broken"):
        parse_corpus(json.dumps(bad))


@pytest.mark.parametrize("patch, msg", [
    ({"expected": {"no_such_flag": True}}, "unknown flag"),
    ({"expected": {"star": "yes"}}, "booleans"),
    ({"values": {"no_such_value": {"rows": 1, "cols": 1, "entries": [0]}}}, "unknown value"),
    ({"expected": {"star": True}, "errata": {"star": {}}}, "corrected"),
])
def test_schema_errors(patch, msg):
    rec = {"name": "x", "a": {"rows": 1, "cols": 1, "entries": [1]},
           "b": {"rows": 1, "cols": 1, "entries": [2]}, "expected": {}} | patch
    with pytest.raises(CorpusError, match=msg):
        parse_corpus(json.dumps([rec]))


def test_top_level_must_be_array():
    with pytest.raises(CorpusError, match="array"):
        parse_corpus('{"name": "x"}')


def test_rational_entries():
    rec = {"name": "r", "a": {"rows": 1, "cols": 1, "entries": ["-1/3"]},
           "b": {"rows": 1, "cols": 1, "entries": [[0, "1/2"]]}, "expected": {}}
    (inst,) = parse_corpus(json.dumps([rec]))
    assert inst.a[0, 0] == pytest.approx(-1 / 3) and inst.b[0, 0] == pytest.approx(0.5j)


def test_instance_round_trip(corpus):
    text = json.dumps([i.to_json() for i in corpus])
    again = parse_corpus(text)
    assert [i.to_json() for i in again] == [i.to_json() for i in corpus]


def test_unknown_names_raise():
    with pytest.raises(KeyError):
        evaluate_flag("nope", np.eye(2), np.eye(2))
    with pytest.raises(KeyError):
        evaluate_value("nope", np.eye(2), np.eye(2))


def test_registries_nonempty():
    assert {"star", "minus", "diamond", "lowner", "dsp", "rdsp", "rol"} <= set(FLAGS)
    assert {"pinv_a", "pinv_b", "pinv_ab", "b_pinv_a_pinv"} <= set(VALUES)

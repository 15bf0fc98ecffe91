"""Fixture corpus of small exact matrix pairs with their expected properties.

Each instance carries boolean flags (order relations, subtractivity, reverse
order law, monotonicity of the Moore-Penrose inverse, ...) and exact matrix
values.  Flags known to be misstated in the source of an instance are kept
as stated under ``expected`` and listed again under ``errata`` with the
value a correct computation gives, so reproduction reports them honestly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

import numpy as np

from . import orders, subtractivity
from .inverses import is_ep, moore_penrose
from .linalg import DEFAULT_TOL, TolerancePolicy, adj, difference, predicates, product, subspace_relate
from .rol import rol_check
from .serialize import MatrixFormatError, matrix_from_json, matrix_to_json


class CorpusError(ValueError):
    """Schema or parse error in a corpus file."""


@dataclass
class CorpusInstance:
    name: str
    a: np.ndarray
    b: np.ndarray
    expected: dict[str, bool]
    provenance: str = ""
    values: dict[str, np.ndarray] = field(default_factory=dict)
    derived: dict[str, bool] = field(default_factory=dict)
    errata: dict[str, dict] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "a": matrix_to_json(self.a),
            "b": matrix_to_json(self.b),
            "expected": dict(self.expected),
            "provenance": self.provenance,
        }
        if self.values:
            out["values"] = {k: matrix_to_json(v) for k, v in self.values.items()}
        if self.derived:
            out["derived"] = dict(self.derived)
        if self.errata:
            out["errata"] = dict(self.errata)
        return out


# ---------------------------------------------------------------- flags

def _order(rel: str, dagger: bool = False, reverse: bool = False):
    def f(a, b, tol):
        if dagger:
            a, b = moore_penrose(a, tol), moore_penrose(b, tol)
        if reverse:
            a, b = b, a
        return orders.holds(rel, a, b, tol).holds
    return f


def _ranges_meet_trivially(a, b, tol):
    """``R(A) ∩ N(B) = R(B) ∩ N(A) = {0}``."""
    from .linalg import Subspace

    def meet(x, y):
        return subspace_relate(Subspace.range_of(x, tol).basis,
                               Subspace.null_of(y, tol).basis, tol).dim_intersection
    return meet(a, b) == 0 and meet(b, a) == 0


def _rol_reversed(a, b, tol):
    return rol_check(b, a, tol, conditions=False).rol_holds


def _condition(name):
    def f(a, b, tol):
        rows = {r.name: r for r in rol_check(a, b, tol).conditions}
        return rows[name].hypothesis_holds
    return f


FLAGS: dict[str, Callable[[np.ndarray, np.ndarray, TolerancePolicy], bool]] = {
    "space": _order("space"),
    "lowner": _order("lowner"),
    "star": _order("star"),
    "minus": _order("minus"),
    "diamond": _order("diamond"),
    "sharp": _order("sharp"),
    "dagger_lowner": _order("lowner", dagger=True),
    "dagger_lowner_reversed": _order("lowner", dagger=True, reverse=True),
    "dagger_star": _order("star", dagger=True),
    "dagger_minus": _order("minus", dagger=True),
    "dagger_diamond": _order("diamond", dagger=True),
    "cross_hermitian": lambda a, b, t: orders.is_cross_hermitian(a, b, t),
    "ab_star_hermitian": lambda a, b, t: predicates(a @ adj(b), t).hermitian,
    "b_star_a_hermitian": lambda a, b, t: predicates(adj(b) @ a, t).hermitian,
    "dsp": lambda a, b, t: subtractivity.check(a, b, t).dsp,
    "rdsp": lambda a, b, t: subtractivity.check(a, b, t).rdsp,
    "rol": lambda a, b, t: rol_check(a, b, t, conditions=False).rol_holds,
    "rol_reversed": _rol_reversed,
    "greville": lambda a, b, t: rol_check(a, b, t, conditions=False).greville,
    "ranges_meet_trivially": _ranges_meet_trivially,
    "a_ep": lambda a, b, t: is_ep(a, t),
    "b_ep": lambda a, b, t: is_ep(b, t),
    "ab_ep": lambda a, b, t: is_ep(product(a, b, tol=t), t),
    "range_a_eq_range_ab": lambda a, b, t: subspace_relate(a, product(a, b, tol=t), t).equal,
    "range_a_eq_range_b": lambda a, b, t: subspace_relate(a, b, t).equal,
    "ep_triple_hypothesis": _condition("a_ep_triple"),
    "b_hermitian": lambda a, b, t: predicates(b, t).hermitian,
}

VALUES: dict[str, Callable[[np.ndarray, np.ndarray, TolerancePolicy], np.ndarray]] = {
    "pinv_a": lambda a, b, t: moore_penrose(a, t),
    "pinv_b": lambda a, b, t: moore_penrose(b, t),
    "pinv_ab": lambda a, b, t: moore_penrose(product(a, b, tol=t), t),
    "pinv_b_minus_a": lambda a, b, t: moore_penrose(difference(b, a, t), t),
    "b_pinv_minus_a_pinv": lambda a, b, t: moore_penrose(b, t) - moore_penrose(a, t),
    "b_pinv_a_pinv": lambda a, b, t: moore_penrose(b, t) @ moore_penrose(a, t),
}


def evaluate_flag(name: str, a, b, tol: TolerancePolicy | None = None) -> bool:
    try:
        fn = FLAGS[name]
    except KeyError:
        raise KeyError(f"unknown flag {name!r}") from None
    return bool(fn(a, b, tol or DEFAULT_TOL))


def evaluate_value(name: str, a, b, tol: TolerancePolicy | None = None) -> np.ndarray:
    try:
        fn = VALUES[name]
    except KeyError:
        raise KeyError(f"unknown value {name!r}") from None
    return fn(a, b, tol or DEFAULT_TOL)


# ---------------------------------------------------------------- reproduction

@dataclass
class FlagCheck:
    flag: str
    expected: bool
    actual: bool
    erratum: bool = False
    corrected: bool | None = None

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class ValueCheck:
    name: str
    max_abs_error: float

    def ok(self, atol: float = 1e-10) -> bool:
        return self.max_abs_error <= atol


@dataclass
class Reproduction:
    name: str
    flags: list[FlagCheck]
    derived: list[FlagCheck]
    values: list[ValueCheck]

    def ok(self, atol: float = 1e-10) -> bool:
        return (all(f.ok for f in self.flags) and all(f.ok for f in self.derived)
                and all(v.ok(atol) for v in self.values))

    @property
    def errata_confirmed(self) -> bool:
        """Every flag marked as an erratum evaluates to its corrected value."""
        return all(f.actual == f.corrected for f in self.flags if f.erratum)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok(),
            "flags": [vars(f) | {"ok": f.ok} for f in self.flags],
            "derived": [vars(f) | {"ok": f.ok} for f in self.derived],
            "values": [{"name": v.name, "max_abs_error": v.max_abs_error, "ok": v.ok()}
                       for v in self.values],
        }


def reproduce(inst: CorpusInstance, tol: TolerancePolicy | None = None) -> Reproduction:
    tol = tol or DEFAULT_TOL
    flags = []
    for name, exp in inst.expected.items():
        err = inst.errata.get(name)
        flags.append(FlagCheck(name, bool(exp), evaluate_flag(name, inst.a, inst.b, tol),
                               erratum=err is not None,
                               corrected=None if err is None else bool(err["corrected"])))
    derived = [FlagCheck(n, bool(v), evaluate_flag(n, inst.a, inst.b, tol))
               for n, v in inst.derived.items()]
    values = []
    for name, want in inst.values.items():
        got = evaluate_value(name, inst.a, inst.b, tol)
        values.append(ValueCheck(name, float(np.max(np.abs(got - want))) if want.size else 0.0))
    return Reproduction(inst.name, flags, derived, values)


# ---------------------------------------------------------------- loading

def _instance_from_json(rec, index: int) -> CorpusInstance:
    if not isinstance(rec, dict):
        raise CorpusError(f"corpus entry {index} is not an object")
    name = rec.get("name", f"#{index}")
    try:
        a = matrix_from_json(rec["a"], f"{name}.a")
        b = matrix_from_json(rec["b"], f"{name}.b")
        expected = rec.get("expected", {})
        if not isinstance(expected, dict) or not all(isinstance(v, bool) for v in expected.values()):
            raise CorpusError("'expected' must map flag names to booleans")
        for flag in list(expected) + list(rec.get("derived", {})):
            if flag not in FLAGS:
                raise CorpusError(f"unknown flag {flag!r}")
        values = {k: matrix_from_json(v, f"{name}.values.{k}")
                  for k, v in rec.get("values", {}).items()}
        for k in values:
            if k not in VALUES:
                raise CorpusError(f"unknown value {k!r}")
        errata = rec.get("errata", {})
        for flag, e in errata.items():
            if flag not in expected or "corrected" not in e:
                raise CorpusError(f"erratum for {flag!r} needs a stated flag and a 'corrected' value")
    except (KeyError, MatrixFormatError, CorpusError) as exc:
        raise CorpusError(f"corpus instance {name!r}: {exc}") from exc
    return CorpusInstance(name, a, b, dict(expected), rec.get("provenance", ""),
                          values, dict(rec.get("derived", {})), dict(errata))


def parse_corpus(text: str) -> list[CorpusInstance]:
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, list):
        raise CorpusError("corpus must be a JSON array of instances")
    return [_instance_from_json(rec, i) for i, rec in enumerate(data)]


def load_corpus(path: str | Path | None = None) -> list[CorpusInstance]:
    """Load a corpus file; ``None`` loads the bundled fixtures."""
    if path is None:
        text = resources.files("pseudoinv").joinpath("data/corpus.json").read_text()
    else:
        text = Path(path).read_text()
    return parse_corpus(text)

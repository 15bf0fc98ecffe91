"""Theorem property-suite runner and counterexample fuzzer."""

from __future__ import annotations

import warnings
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .claims import CLAIMS, SUITE_CLAIMS, Claim, Outcome, get_claim
from .corpus import CorpusInstance, FLAGS, evaluate_flag, load_corpus, reproduce
from .generators import SUITE_TOL, GeneratedPair, generate
from .linalg import TolerancePolicy
from .serialize import to_jsonable


@dataclass(frozen=True)
class SuiteConfig:
    dims: tuple[int, int] = (2, 6)
    trials_per_theorem: int = 500
    seed: int = 0
    tol: TolerancePolicy = SUITE_TOL
    claims: tuple[str, ...] = SUITE_CLAIMS
    max_recorded_violations: int = 5
    workers: int = 1


@dataclass
class Violation:
    seed: list[int]
    family: str
    a: np.ndarray
    b: np.ndarray
    residuals: dict

    def to_json(self) -> dict:
        return {"seed": self.seed, "family": self.family, "a": to_jsonable(self.a),
                "b": to_jsonable(self.b), "residuals": to_jsonable(self.residuals)}


@dataclass
class TheoremReport:
    theorem_id: str
    trials: int = 0
    exercised: int = 0
    vacuous: int = 0
    violation_count: int = 0
    violations: list[Violation] = field(default_factory=list)
    marginal: int = 0
    description: str = ""

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "description": self.description,
            "trials": self.trials,
            "exercised": self.exercised,
            "vacuous": self.vacuous,
            "marginal": self.marginal,
            "violation_count": self.violation_count,
            "violations": [v.to_json() for v in self.violations],
            "passed": self.passed,
        }


def claim_seed(seed: int, claim_id: str, trial: int) -> list[int]:
    return [int(seed), zlib.crc32(claim_id.encode()), int(trial)]


def _trial_plan(claim: Claim, dims: tuple[int, int], trial: int) -> tuple[str, int]:
    lo, hi = dims
    n_dims = hi - lo + 1
    dim = lo + trial % n_dims
    family = claim.families[(trial // n_dims) % len(claim.families)]
    return family, dim


def _fuzz_plan(claim: Claim, dims: tuple[int, int], budget: int, trial: int) -> tuple[str, int]:
    # dimension-major: the budget is split evenly over ascending dims, so the
    # first hit comes from the smallest dimension that has one
    lo, hi = dims
    dim = lo + trial * (hi - lo + 1) // max(budget, 1)
    return claim.families[trial % len(claim.families)], dim


def run_trial(claim: Claim, seed: int, trial: int, dims=(2, 6),
              tol: TolerancePolicy = SUITE_TOL, plan: tuple[str, int] | None = None
              ) -> tuple[GeneratedPair, Outcome]:
    family, dim = plan or _trial_plan(claim, dims, trial)
    s = claim_seed(seed, claim.id, trial)
    pair = generate(family, dim, s, tol)
    return pair, claim.check(pair, tol, np.random.default_rng(s + [1]))


def run_claim(claim: Claim | str, config: SuiteConfig) -> TheoremReport:
    claim = get_claim(claim) if isinstance(claim, str) else claim
    rep = TheoremReport(claim.id, description=claim.description)
    for trial in range(config.trials_per_theorem):
        pair, out = run_trial(claim, config.seed, trial, config.dims, config.tol)
        rep.trials += 1
        if not out.exercised:
            rep.vacuous += 1
            continue
        rep.exercised += 1
        if out.marginal:
            rep.marginal += 1
            continue
        if not out.ok:
            rep.violation_count += 1
            if len(rep.violations) < config.max_recorded_violations:
                rep.violations.append(Violation(pair.seed, pair.kind, pair.a, pair.b, out.residuals))
    return rep


@dataclass
class SuiteResult:
    reports: list[TheoremReport]
    corpus_failures: list[str]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports) and not self.corpus_failures

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "theorems": [r.to_json() for r in self.reports],
            "corpus_failures": list(self.corpus_failures),
        }


def run_suite(config: SuiteConfig | None = None, corpus: list[CorpusInstance] | None = None
              ) -> SuiteResult:
    """Run every configured claim; the result is deterministic in ``config``.

    The suite also replays the corpus: an instance fails when a stated flag
    or exact value does not reproduce.
    """
    config = config or SuiteConfig()
    if config.trials_per_theorem == 0:
        warnings.warn("trials_per_theorem = 0: every theorem report is vacuous", stacklevel=2)
    if config.workers > 1:
        # claims are independent; map() preserves order, so reports do not
        # depend on scheduling
        with ProcessPoolExecutor(config.workers) as pool:
            reports = list(pool.map(run_claim, config.claims, [config] * len(config.claims)))
    else:
        reports = [run_claim(c, config) for c in config.claims]
    corpus = load_corpus() if corpus is None else corpus
    failures = [inst.name for inst in corpus if not reproduce(inst).ok()]
    return SuiteResult(reports, failures)


def self_test(trials: int = 200, seed: int = 0) -> TheoremReport:
    """Run the deliberately false implication "minus ⇒ star" as if it were a theorem.

    A working harness reports violations.
    """
    return run_claim("minus_implies_star", SuiteConfig(trials_per_theorem=trials, seed=seed))


# ---------------------------------------------------------------- fuzzing

def _violates(claim: Claim, a, b, tol, seed) -> bool:
    pair = GeneratedPair(a, b, "shrink", a.shape[0], seed)
    try:
        out = claim.check(pair, tol, np.random.default_rng(seed))
    except (ValueError, np.linalg.LinAlgError):
        return False
    return out.exercised and not out.ok and not out.marginal


def shrink(claim: Claim, a: np.ndarray, b: np.ndarray, tol: TolerancePolicy = SUITE_TOL,
           seed=0) -> tuple[np.ndarray, np.ndarray]:
    """Greedy minimization: drop rows/columns, zero entries, round entries,
    keeping every step that still violates the claim."""
    a, b = a.copy(), b.copy()
    changed = True
    while changed:
        changed = False
        n = a.shape[0]
        if n > 2:
            for i in range(n):
                keep = [j for j in range(n) if j != i]
                a2, b2 = a[np.ix_(keep, keep)], b[np.ix_(keep, keep)]
                if _violates(claim, a2, b2, tol, seed):
                    a, b, changed = a2, b2, True
                    break
            if changed:
                continue
        for m_idx in (0, 1):
            for i in range(n):
                for j in range(n):
                    cur = (a, b)[m_idx]
                    if cur[i, j] == 0:
                        continue
                    for sym in (True, False):
                        trial = cur.copy()
                        trial[i, j] = 0
                        if sym:
                            trial[j, i] = 0
                        a2, b2 = (trial, b) if m_idx == 0 else (a, trial)
                        if _violates(claim, a2, b2, tol, seed):
                            a, b, changed = a2, b2, True
                            break
        for m_idx in (0, 1):
            cur = (a, b)[m_idx]
            rounded = np.round(cur.real) + 1j * np.round(cur.imag)
            if not np.array_equal(rounded, cur) and np.any(rounded):
                a2, b2 = (rounded, b) if m_idx == 0 else (a, rounded)
                if _violates(claim, a2, b2, tol, seed):
                    a, b, changed = a2, b2, True
    return a, b


def _summary_flags(a, b, tol) -> dict[str, bool]:
    names = ("space", "star", "minus", "diamond", "lowner", "dsp", "rdsp", "rol", "b_hermitian")
    return {n: evaluate_flag(n, a, b, tol) for n in names if n in FLAGS}


def fuzz(claim_id: str, budget: int = 10_000, dims: tuple[int, int] = (2, 4), seed: int = 0,
         tol: TolerancePolicy = SUITE_TOL) -> CorpusInstance | None:
    """Search the claim's families for a violating pair and return it minimized.

    Dimensions are searched in ascending order.  Marginal trials never
    count as violations.
    """
    claim = get_claim(claim_id)
    for trial in range(budget):
        pair, out = run_trial(claim, seed, trial, dims, tol, _fuzz_plan(claim, dims, budget, trial))
        if out.exercised and not out.ok and not out.marginal:
            s = claim_seed(seed, claim.id, trial)
            a, b = shrink(claim, pair.a, pair.b, tol, s)
            return CorpusInstance(
                name=f"fuzz_{claim.id}_{trial}",
                a=a,
                b=b,
                expected=_summary_flags(a, b, tol),
                provenance=f"fuzz {claim.id} seed={seed} trial={trial} family={pair.kind}",
            )
    return None


__all__ = [
    "CLAIMS",
    "SuiteConfig",
    "SuiteResult",
    "TheoremReport",
    "Violation",
    "fuzz",
    "run_claim",
    "run_suite",
    "self_test",
    "shrink",
]

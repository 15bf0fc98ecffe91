"""Command-line front end.

Exit codes: 0 success, 1 property violation or counterexample found,
2 invalid input or an inapplicable hypothesis (diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

import numpy as np

from .analysis import AnalysisReport, analyze
from .claims import CLAIMS, SUITE_CLAIMS
from .corpus import CorpusError, load_corpus, reproduce
from .generators import SUITE_TOL
from .harness import SuiteConfig, SuiteResult, fuzz, run_suite
from .inverses import group_inverse, moore_penrose
from .linalg import DEFAULT_TOL, LinalgError, TolerancePolicy
from .serialize import dumps, load_matrix, matrix_to_json

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    """Bad command-line input that argparse itself cannot catch."""


# ---------------------------------------------------------------- parsing helpers

def parse_dims(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= LO <= HI, got {text!r}")
    return lo, hi


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text!r}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text!r}")
    return v


def resolve_seed(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("PSEUDOINV_SEED")
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"PSEUDOINV_SEED must be an integer, got {env!r}") from None


def _tolerance(args, base: TolerancePolicy) -> TolerancePolicy:
    return base.with_overrides(rank_rel=args.tol_rank, eq_rel=args.tol_eq)


# ---------------------------------------------------------------- text formatting

def _fmt_entry(z: complex) -> str:
    def real(x: float) -> str:
        if x == 0:
            return "0"
        f = Fraction(x).limit_denominator(1000)
        if abs(float(f) - x) <= 1e-12 * max(1.0, abs(x)):
            return str(f)
        return f"{x:.6g}"
    z = complex(z)
    if abs(z.imag) <= 1e-14 * max(1.0, abs(z)):
        return real(z.real)
    if abs(z.real) <= 1e-14 * max(1.0, abs(z)):
        return real(z.imag) + "i"
    sign = "+" if z.imag >= 0 else "-"
    return f"{real(z.real)}{sign}{real(abs(z.imag))}i"


def format_matrix(m: np.ndarray) -> str:
    cells = [[_fmt_entry(z) for z in row] for row in np.asarray(m)]
    if not cells or not cells[0]:
        return f"[] ({m.shape[0]}x{m.shape[1]})"
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def _order_rows(report) -> list[list[str]]:
    rows = []
    for rel, v in report.verdicts.items():
        res = max(v.residuals.values()) if v.residuals else float("nan")
        note = v.reason or ""
        rows.append([rel.value, _yn(v.holds), _yn(v.marginal), f"{res:.2e}", note])
    return rows


def format_analysis(r: AnalysisReport) -> str:
    hdr = ["relation", "holds", "marginal", "max residual", "note"]
    s = r.subtractivity
    out = [
        "orders between A and B",
        _table(hdr, _order_rows(r.orders)),
        f"cross-Hermitian (AB*, B*A): {_yn(r.orders.cross_hermitian)}",
        "",
        "orders between A† and B†",
        _table(hdr, _order_rows(r.dagger_orders)),
        "",
        "subtractivity",
        _table(["property", "holds", "residual"],
               [["dsp", _yn(s.dsp), f"{s.residual_dsp:.2e}"],
                ["rdsp", _yn(s.rdsp), ""]]),
        "",
        "reverse order law",
        _table(["property", "holds", "residual"],
               [["(AB)† = B†A†", _yn(r.rol.rol_holds), f"{r.rol.rol_residual:.2e}"],
                ["R(A*AB) ⊆ R(B)", _yn(r.rol.greville_1), ""],
                ["R(BB*A*) ⊆ R(A*)", _yn(r.rol.greville_2), ""]]),
        "",
        "sufficient conditions",
        _table(["condition", "hypothesis", "conclusion", "note"],
               [[c.name, _yn(c.hypothesis_holds), _yn(c.conclusion_holds), c.note]
                for c in r.rol.conditions]),
    ]
    return "\n".join(out)


def format_suite(res: SuiteResult) -> str:
    rows = []
    for r in res.reports:
        rows.append([r.theorem_id, str(r.trials), str(r.exercised), str(r.vacuous),
                     str(r.marginal), str(r.violation_count), "PASS" if r.passed else "FAIL"])
    text = _table(["theorem", "trials", "exercised", "vacuous", "marginal", "violations", "status"], rows)
    lines = [text]
    for r in res.reports:
        for v in r.violations[:1]:
            worst = max(v.residuals.items(), key=lambda kv: kv[1], default=None)
            extra = f" worst {worst[0]}={worst[1]:.2e}" if worst else ""
            lines.append(f"violation {r.theorem_id}: family {v.family} seed {v.seed}{extra}")
    if res.corpus_failures:
        lines.append("corpus instances not reproducing: " + ", ".join(res.corpus_failures))
    lines.append("suite: " + ("PASS" if res.passed else "FAIL"))
    return "\n".join(lines)


# ---------------------------------------------------------------- commands

def _emit(args, payload, text: str) -> None:
    out = dumps(payload, indent=2) if args.output == "json" else text
    sys.stdout.write(out + "\n")
    sys.stdout.flush()


def cmd_analyze(args) -> int:
    tol = _tolerance(args, DEFAULT_TOL)
    report = analyze(load_matrix(args.a), load_matrix(args.b), tol)
    _emit(args, report, format_analysis(report))
    return EXIT_OK


def cmd_pinv(args) -> int:
    tol = _tolerance(args, DEFAULT_TOL)
    x = moore_penrose(load_matrix(args.matrix), tol)
    _emit(args, matrix_to_json(x), format_matrix(x))
    return EXIT_OK


def cmd_group_inverse(args) -> int:
    tol = _tolerance(args, DEFAULT_TOL)
    t = load_matrix(args.matrix)
    if t.shape[0] != t.shape[1]:
        raise UsageError(f"group inverse needs a square matrix, got {t.shape[0]}x{t.shape[1]}")
    x = group_inverse(t, tol)
    if x is None:
        raise UsageError("matrix is not group invertible: rank(T²) < rank(T)")
    _emit(args, matrix_to_json(x), format_matrix(x))
    return EXIT_OK


def cmd_theorems(args) -> int:
    claims = tuple(args.claim) if args.claim else SUITE_CLAIMS
    for c in claims:
        if c not in CLAIMS:
            raise UsageError(f"unknown claim {c!r}")
    corpus = load_corpus(args.corpus) if args.corpus else None
    config = SuiteConfig(dims=args.dims or (2, 6), trials_per_theorem=args.trials,
                         seed=resolve_seed(args.seed), tol=_tolerance(args, SUITE_TOL), claims=claims,
                         workers=args.workers)
    res = run_suite(config, corpus)
    _emit(args, res, format_suite(res))
    return EXIT_OK if res.passed else EXIT_VIOLATION


def cmd_corpus(args) -> int:
    tol = _tolerance(args, DEFAULT_TOL)
    reps = [reproduce(inst, tol) for inst in load_corpus(args.corpus)]
    rows = []
    for r in reps:
        bad = [f.flag for f in r.flags + r.derived if not f.ok]
        bad += [v.name for v in r.values if not v.ok()]
        errata = [f.flag for f in r.flags if f.erratum]
        note = ""
        if errata:
            note = "errata " + ",".join(errata) + (" confirmed" if r.errata_confirmed else " NOT confirmed")
        rows.append([r.name, str(len(r.flags)), str(len(r.derived)), str(len(r.values)),
                     "ok" if r.ok() else "FAIL", ",".join(bad), note])
    text = _table(["instance", "flags", "derived", "values", "status", "mismatches", "note"], rows)
    _emit(args, {"instances": reps, "passed": all(r.ok() for r in reps)}, text)
    return EXIT_OK if all(r.ok() for r in reps) else EXIT_VIOLATION


def cmd_fuzz(args) -> int:
    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; known: {', '.join(sorted(CLAIMS))}")
    inst = fuzz(args.claim, budget=args.trials, dims=args.dims or (2, 4),
                seed=resolve_seed(args.seed), tol=_tolerance(args, SUITE_TOL))
    if inst is None:
        _emit(args, {"claim": args.claim, "counterexample": None},
              f"no counterexample to {args.claim} in {args.trials} attempts")
        return EXIT_OK
    text = "\n".join([
        f"counterexample to {args.claim} ({inst.provenance})",
        "A =", format_matrix(inst.a), "B =", format_matrix(inst.b),
        "flags: " + ", ".join(f"{k}={_yn(v)}" for k, v in inst.expected.items()),
    ])
    _emit(args, {"claim": args.claim, "counterexample": inst.to_json()}, text)
    return EXIT_VIOLATION


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-rank", type=_positive_float, default=None,
                        help="relative singular-value cutoff for rank decisions")
    common.add_argument("--tol-eq", type=_positive_float, default=None,
                        help="relative residual threshold for equalities")
    common.add_argument("--output", choices=("text", "json"), default="text")

    suite = argparse.ArgumentParser(add_help=False)
    suite.add_argument("--seed", type=int, default=None, help="base seed (fallback: $PSEUDOINV_SEED, then 0)")
    suite.add_argument("--dims", type=parse_dims, default=None, metavar="LO..HI")

    p = argparse.ArgumentParser(prog="pseudoinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="orders, subtractivity and ROL of a pair")
    a.add_argument("a")
    a.add_argument("b")
    a.set_defaults(func=cmd_analyze)

    for name, func, hlp in (("pinv", cmd_pinv, "Moore-Penrose inverse"),
                            ("group-inverse", cmd_group_inverse, "group inverse")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("matrix")
        s.set_defaults(func=func)

    t = sub.add_parser("theorems", parents=[common, suite], help="run the theorem property suites")
    t.add_argument("--trials", type=_nonneg_int, default=500)
    t.add_argument("--claim", action="append", help="restrict to a claim id (repeatable)")
    t.add_argument("--corpus", default=None, metavar="PATH")
    t.add_argument("--workers", type=_nonneg_int, default=1, help="worker processes")
    t.set_defaults(func=cmd_theorems)

    c = sub.add_parser("corpus", parents=[common], help="replay the fixture corpus")
    c.add_argument("--corpus", default=None, metavar="PATH")
    c.set_defaults(func=cmd_corpus)

    f = sub.add_parser("fuzz", parents=[common, suite], help="search for a counterexample to a claim")
    f.add_argument("claim")
    f.add_argument("--trials", type=_nonneg_int, default=10_000, help="attempt budget")
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, LinalgError, CorpusError, ValueError) as exc:
        print(f"pseudoinv: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"pseudoinv: error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

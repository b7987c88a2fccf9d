"""Command-line front end: ``fuzzopt rank|eval|diff|solve``.

Tables print 6 significant digits; ``--json`` emits full-precision,
stable-keyed documents.  Failure diagnostics go to stderr only.  Exit
codes: 0 success, 2 parse/validation error, 3 no gH-derivative, 4 no
critical point found.  The env var ``FUZZOPT_ALPHA_GRID`` overrides the
quadrature interval count K (even integer).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .core import Ordering, TriangularFuzzyNumber, compare, rank
from .functions import NoGHDerivative, evaluate, gh_derivative_numeric
from .numerics import QuadratureSpec
from .optimizer import NoCriticalPointFound, solve
from .problem_io import (
    ProblemFormatError,
    load_problem_file,
    to_problem,
    to_solver_config,
)


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _fmt_point(values) -> str:
    return "(" + ", ".join(_fmt(v) for v in values) + ")"


def _fmt_triple(t: TriangularFuzzyNumber) -> str:
    return f"[{_fmt(t.left)}, {_fmt(t.peak)}, {_fmt(t.right)}]"


def _quadrature_spec() -> QuadratureSpec:
    raw = os.environ.get("FUZZOPT_ALPHA_GRID")
    if raw is None:
        return QuadratureSpec()
    try:
        return QuadratureSpec(int(raw))
    except ValueError as exc:
        raise ProblemFormatError(
            f"FUZZOPT_ALPHA_GRID must be an even integer >= 2, got {raw!r}: {exc}"
        ) from exc


def _parse_fuzzy_literal(text: str) -> TriangularFuzzyNumber:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"malformed fuzzy literal {text!r}: {exc}") from exc
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return TriangularFuzzyNumber.crisp(float(raw))
    if isinstance(raw, list) and len(raw) == 3:
        try:
            return TriangularFuzzyNumber(*(float(v) for v in raw))
        except (TypeError, ValueError) as exc:
            raise ProblemFormatError(f"invalid fuzzy literal {text!r}: {exc}") from exc
    raise ProblemFormatError(
        f"fuzzy literal must be a number or [left, peak, right], got {text!r}"
    )


def _cmd_rank(args) -> int:
    numbers = [_parse_fuzzy_literal(lit) for lit in args.numbers]
    width = max(len(_fmt_triple(t)) for t in numbers) + 2
    print(f"{'#':<3} {'fuzzy number':<{width}} rank")
    for idx, t in enumerate(numbers, start=1):
        print(f"{idx:<3} {_fmt_triple(t):<{width}} {_fmt(rank(t).value)}")
    order = sorted(range(len(numbers)), key=lambda i: rank(numbers[i]).value)
    parts = [f"#{order[0] + 1}"]
    for prev, cur in zip(order, order[1:]):
        tie = compare(numbers[prev], numbers[cur]) is Ordering.EQUIVALENT
        parts.append(("= " if tie else "< ").strip() + f" #{cur + 1}")
    print("order: " + " ".join(parts))
    return 0


def _load(args):
    pf = load_problem_file(args.file)
    return pf, to_problem(pf)


def _check_at(problem, at) -> np.ndarray:
    x = np.asarray(at, dtype=np.float64)
    if x.shape[0] != problem.objective.dimension:
        raise ProblemFormatError(
            f"--at gives {x.shape[0]} coordinate(s), problem has dimension "
            f"{problem.objective.dimension}"
        )
    return x


def _cmd_eval(args) -> int:
    _, problem = _load(args)
    x = _check_at(problem, args.at)
    alphas = args.alphas if args.alphas is not None else [0.0, 0.25, 0.5, 0.75, 1.0]
    for a in alphas:
        if not 0.0 <= a <= 1.0:
            raise ProblemFormatError(f"--alphas values must lie in [0, 1], got {a}")
    value = evaluate(problem.objective, x)
    cuts = [value.alpha_cut(a) for a in alphas]
    r = rank(value).value
    if args.json:
        doc = {
            "at": [float(v) for v in x],
            "value": list(value.as_triple()),
            "rank": r,
            "alpha_cuts": [
                {"alpha": float(a), "lo": c.lo, "hi": c.hi}
                for a, c in zip(alphas, cuts)
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"f{_fmt_point(x)} = {_fmt_triple(value)}")
    print(f"rank: {_fmt(r)}")
    print(f"{'alpha':<8} cut")
    for a, c in zip(alphas, cuts):
        print(f"{_fmt(a):<8} [{_fmt(c.lo)}, {_fmt(c.hi)}]")
    return 0


def _cmd_diff(args) -> int:
    _, problem = _load(args)
    x = _check_at(problem, args.at)
    n = problem.objective.dimension
    if not 1 <= args.wrt <= n:
        raise ProblemFormatError(f"--wrt must be in 1..{n}, got {args.wrt}")
    quad = _quadrature_spec()
    deriv = gh_derivative_numeric(problem.objective, x, args.wrt - 1, K=quad.K)
    r = rank(deriv).value
    if args.json:
        doc = {
            "at": [float(v) for v in x],
            "wrt": args.wrt,
            "alphas": deriv.alphas.tolist(),
            "lo": deriv.lo.tolist(),
            "hi": deriv.hi.tolist(),
            "rank": r,
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"partial gH-derivative wrt x{args.wrt} at {_fmt_point(x)} (K={deriv.K}):")
    print(f"{'alpha':<8} cut")
    shown = sorted({round(j * deriv.K / 8) for j in range(9)})
    for k in shown:
        print(
            f"{_fmt(deriv.alphas[k]):<8} [{_fmt(deriv.lo[k])}, {_fmt(deriv.hi[k])}]"
        )
    print(f"rank: {_fmt(r)}")
    return 0


def _report_doc(report) -> dict:
    return {
        "location": list(report.location),
        "classification": report.classification.value,
        "rank_value": report.rank_value,
        "fuzzy_value": list(report.fuzzy_value.as_triple()),
        "gradient_residual": report.gradient_residual,
        "oracle_residual": report.oracle_residual,
    }


def _cmd_solve(args) -> int:
    pf, problem = _load(args)
    quad = _quadrature_spec()
    box = tuple((args.box[0], args.box[1]) for _ in range(pf.dimension)) if args.box else None
    cfg = to_solver_config(
        pf, quad, starts_per_axis=args.starts, search_box=box, newton_tol=args.tol
    )
    report = solve(problem, cfg)
    if args.json:
        doc = {
            "sense": report.sense.value,
            "critical_points": [_report_doc(r) for r in report.points],
            "incumbent": _report_doc(report.incumbent) if report.incumbent else None,
            "message": report.message,
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"critical points ({len(report.points)}), sense {report.sense.value}:")
    header = f"{'location':<24} {'classification':<18} {'rank value':<12} {'|grad m|':<10} oracle"
    print(header)
    for r in report.points:
        print(
            f"{_fmt_point(r.location):<24} {r.classification.value:<18} "
            f"{_fmt(r.rank_value):<12} {_fmt(r.gradient_residual):<10} "
            f"{_fmt(r.oracle_residual)}"
        )
    print(report.message)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzopt",
        description="Rank fuzzy numbers and optimize fuzzy polynomial objectives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="rank fuzzy-number literals like [0,1,3]")
    p_rank.add_argument("numbers", nargs="+", metavar="NUMBER")
    p_rank.set_defaults(func=_cmd_rank)

    p_eval = sub.add_parser("eval", help="evaluate a problem objective at a point")
    p_eval.add_argument("file")
    p_eval.add_argument("--at", nargs="+", type=float, required=True)
    p_eval.add_argument("--alphas", nargs="+", type=float, default=None)
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=_cmd_eval)

    p_diff = sub.add_parser("diff", help="numeric partial gH-derivative at a point")
    p_diff.add_argument("file")
    p_diff.add_argument("--at", nargs="+", type=float, required=True)
    p_diff.add_argument("--wrt", type=int, default=1, help="coordinate index, 1-based")
    p_diff.add_argument("--json", action="store_true")
    p_diff.set_defaults(func=_cmd_diff)

    p_solve = sub.add_parser("solve", help="find and classify critical points")
    p_solve.add_argument("file")
    p_solve.add_argument("--starts", type=int, default=None)
    p_solve.add_argument("--box", nargs=2, type=float, default=None, metavar=("LO", "HI"))
    p_solve.add_argument("--tol", type=float, default=None)
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoGHDerivative as exc:
        print(f"fuzzopt: no gH-derivative: {exc}", file=sys.stderr)
        return 3
    except NoCriticalPointFound as exc:
        print(f"fuzzopt: {exc}", file=sys.stderr)
        return 4
    except (ProblemFormatError, ValueError, OSError) as exc:
        print(f"fuzzopt: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

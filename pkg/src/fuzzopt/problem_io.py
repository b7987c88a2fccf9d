"""JSON problem files: parsing, validation and serialization.

A problem file is a single JSON document:

    {
      "dimension": 1,
      "sense": "minimize",
      "terms": [
        {"coef": [0, 1, 3], "exponents": [3]},
        {"coef": [-13, -12, -11], "exponents": [2]},
        {"coef": 2.5, "exponents": [0], "sign": -1}
      ],
      "domain": [[0, 100]],
      "solver": {"starts": 9, "box": [[-100, 100]], "newton_tol": 1e-10,
                 "max_iters": 100, "dedupe_radius": 1e-6}
    }

Crisp coefficients may be written as a bare number; they normalize to the
degenerate triple (c, c, c).  ``sign`` defaults to +1.  ``domain`` and
``solver`` are optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import TriangularFuzzyNumber
from .functions import FuzzyPolynomial, FuzzyTerm, Monomial
from .numerics import QuadratureSpec
from .optimizer import Problem, Sense, SolverConfig

_SOLVER_KEYS = {"starts", "box", "newton_tol", "max_iters", "dedupe_radius"}


class ProblemFormatError(ValueError):
    """Problem file fails validation; the message names the offender."""


@dataclass
class TermSpec:
    coef: tuple[float, float, float]
    exponents: tuple[int, ...]
    sign: int = 1


@dataclass
class ProblemFile:
    dimension: int
    sense: str
    terms: list[TermSpec]
    domain: list[tuple[float, float]] | None = None
    solver: dict = field(default_factory=dict)


def _coerce_coef(raw, idx: int) -> tuple[float, float, float]:
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        c = float(raw)
        return (c, c, c)
    if (
        isinstance(raw, list)
        and len(raw) == 3
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
    ):
        left, peak, right = (float(v) for v in raw)
        if not left <= peak <= right:
            raise ProblemFormatError(
                f"term {idx}: coefficient triple must satisfy left <= peak <= right, "
                f"got {raw}"
            )
        return (left, peak, right)
    raise ProblemFormatError(
        f"term {idx}: coef must be a number or a [left, peak, right] triple, got {raw!r}"
    )


def _coerce_exponents(raw, dimension: int, idx: int) -> tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != dimension:
        raise ProblemFormatError(
            f"term {idx}: exponents must be a list of {dimension} integer(s), got {raw!r}"
        )
    exps = []
    for e in raw:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ProblemFormatError(
                f"term {idx}: exponents must be nonnegative integers, got {raw!r}"
            )
        exps.append(e)
    return tuple(exps)


def _coerce_box(raw, dimension: int, label: str) -> list[tuple[float, float]]:
    if not isinstance(raw, list) or len(raw) != dimension:
        raise ProblemFormatError(
            f"{label} must list one [lo, hi] pair per coordinate ({dimension})"
        )
    box = []
    for k, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise ProblemFormatError(f"{label}[{k}] must be a [lo, hi] pair, got {pair!r}")
        lo, hi = float(pair[0]), float(pair[1])
        if not lo <= hi:
            raise ProblemFormatError(f"{label}[{k}] must satisfy lo <= hi, got {pair!r}")
        box.append((lo, hi))
    return box


def parse_problem_file(text: str) -> ProblemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ProblemFormatError("problem file must be a JSON object")

    dimension = doc.get("dimension")
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        raise ProblemFormatError(f"dimension must be a positive integer, got {dimension!r}")

    sense = doc.get("sense", "minimize")
    if sense not in ("minimize", "maximize"):
        raise ProblemFormatError(f'sense must be "minimize" or "maximize", got {sense!r}')

    raw_terms = doc.get("terms")
    if not isinstance(raw_terms, list) or not raw_terms:
        raise ProblemFormatError("terms must be a non-empty list")
    terms = []
    for idx, raw in enumerate(raw_terms):
        if not isinstance(raw, dict):
            raise ProblemFormatError(f"term {idx}: must be an object, got {raw!r}")
        unknown = set(raw) - {"coef", "exponents", "sign"}
        if unknown:
            raise ProblemFormatError(f"term {idx}: unknown keys {sorted(unknown)}")
        sign = raw.get("sign", 1)
        if sign not in (1, -1):
            raise ProblemFormatError(f"term {idx}: sign must be 1 or -1, got {sign!r}")
        terms.append(
            TermSpec(
                coef=_coerce_coef(raw.get("coef"), idx),
                exponents=_coerce_exponents(raw.get("exponents"), dimension, idx),
                sign=int(sign),
            )
        )

    domain = None
    if doc.get("domain") is not None:
        domain = _coerce_box(doc["domain"], dimension, "domain")

    solver = {}
    if doc.get("solver") is not None:
        raw_solver = doc["solver"]
        if not isinstance(raw_solver, dict):
            raise ProblemFormatError("solver must be an object")
        unknown = set(raw_solver) - _SOLVER_KEYS
        if unknown:
            raise ProblemFormatError(f"solver: unknown keys {sorted(unknown)}")
        solver = dict(raw_solver)
        if "box" in solver:
            solver["box"] = _coerce_box(solver["box"], dimension, "solver.box")

    return ProblemFile(
        dimension=dimension, sense=sense, terms=terms, domain=domain, solver=solver
    )


def load_problem_file(path) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem_file(fh.read())


def serialize_problem_file(pf: ProblemFile) -> str:
    doc: dict = {
        "dimension": pf.dimension,
        "sense": pf.sense,
        "terms": [
            {"coef": list(t.coef), "exponents": list(t.exponents), "sign": t.sign}
            for t in pf.terms
        ],
    }
    if pf.domain is not None:
        doc["domain"] = [list(pair) for pair in pf.domain]
    if pf.solver:
        solver = dict(pf.solver)
        if "box" in solver:
            solver["box"] = [list(pair) for pair in solver["box"]]
        doc["solver"] = solver
    return json.dumps(doc, indent=2)


def to_problem(pf: ProblemFile) -> Problem:
    terms = tuple(
        FuzzyTerm(
            coefficient=TriangularFuzzyNumber(*t.coef),
            monomial=Monomial(t.exponents),
            sign=t.sign,
        )
        for t in pf.terms
    )
    return Problem(
        objective=FuzzyPolynomial(dimension=pf.dimension, terms=terms),
        sense=Sense(pf.sense),
        domain=tuple(pf.domain) if pf.domain is not None else None,
    )


def to_solver_config(
    pf: ProblemFile, quadrature: QuadratureSpec, **overrides
) -> SolverConfig:
    """Config from file-level solver settings, then explicit overrides."""
    merged: dict = {
        "starts_per_axis": pf.solver.get("starts", 9),
        "newton_tol": pf.solver.get("newton_tol", 1e-10),
        "max_iters": pf.solver.get("max_iters", 100),
        "dedupe_radius": pf.solver.get("dedupe_radius", 1e-6),
    }
    if pf.solver.get("box") is not None:
        merged["search_box"] = tuple(pf.solver["box"])
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value
    try:
        return SolverConfig(quadrature=quadrature, **merged)
    except ValueError as exc:
        raise ProblemFormatError(f"solver settings invalid: {exc}") from exc

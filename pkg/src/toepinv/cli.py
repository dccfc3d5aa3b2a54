"""Command line surface: verification, search, fuzzing, inversion, comparison.

Numbers cross the CLI boundary in exact-friendly forms: complex values
as "a+bi" text, rationals as p/q in text and {"num": p, "den": q} in
JSON.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 search did not converge.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import classes, functionals, schwarz, search, series
from .classes import ClassId
from .functionals import FunctionalId

__all__ = [
    "RunConfig",
    "build_parser",
    "cmd_compare",
    "cmd_invert",
    "cmd_lemma",
    "cmd_search",
    "cmd_verify_extremal",
    "format_complex",
    "main",
    "parse_complex",
]

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NONCONVERGED = 3

VERIFY_TOL = 1e-12
LEMMA_TOL = 1e-10
SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    command: str
    class_id: ClassId | None = None
    functional: FunctionalId | None = None
    starts: int = 64
    iters: int = 2000
    samples: int = 100000
    seed: int = 0
    tol: float = 1e-4
    format: str = "text"
    output_path: str | None = None
    coeffs: str | None = None


def _fmt_real(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return f"{v:.12g}"


def format_complex(z: complex) -> str:
    """Render a complex number in a+bi form, trimming zero parts."""
    z = complex(z)
    re, im = z.real, z.imag
    if im == 0.0:
        return _fmt_real(re)
    if im == 1.0:
        tail = "i"
    elif im == -1.0:
        tail = "-i"
    else:
        tail = _fmt_real(im) + "i"
    if re == 0.0:
        return tail
    sign = "" if tail.startswith("-") else "+"
    return _fmt_real(re) + sign + tail


def parse_complex(text: str) -> complex:
    """Parse a+bi text (also accepts the python j suffix and bare reals)."""
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    if not cleaned:
        raise ValueError("empty complex literal")
    return complex(cleaned)


def _rational_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def _rational_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------- commands


def cmd_verify_extremal(cfg: RunConfig) -> tuple[int, dict]:
    """Recompute every attained value in the catalog against its exact bound."""
    rows = []
    worst = 0.0
    for entry in classes.extremal_catalog():
        A = entry.inverse_coeffs
        for fid, bound in entry.attained.items():
            value = functionals.bound_value(fid, A.A2, A.A3, A.A4)
            err = abs(float(value) - float(bound))
            worst = max(worst, err)
            rows.append(
                {
                    "label": entry.label,
                    "class": entry.class_id.name,
                    "functional": fid.name,
                    "attained": float(value),
                    "bound": _rational_json(bound),
                    "abs_error": err,
                }
            )
    passed = worst <= VERIFY_TOL
    report = {
        "command": "verify-extremal",
        "schema_version": SCHEMA_VERSION,
        "tolerance": VERIFY_TOL,
        "rows": rows,
        "max_abs_error": worst,
        "passed": passed,
    }
    return (EXIT_OK if passed else EXIT_VERIFY_FAIL), report


def cmd_search(cfg: RunConfig) -> tuple[int, dict]:
    problem = search.SearchProblem(
        cfg.class_id,
        cfg.functional,
        starts=cfg.starts,
        max_iters=cfg.iters,
        seed=cfg.seed,
    )
    result = search.maximize(problem)
    bound = search.exact_bound(cfg.class_id, cfg.functional)
    rel_gap = result.gap / float(bound)
    report = {
        "command": "search",
        "schema_version": SCHEMA_VERSION,
        "class": cfg.class_id.name,
        "functional": cfg.functional.name,
        "seed": cfg.seed,
        "starts": cfg.starts,
        "iters": cfg.iters,
        "best_value": result.best_value,
        "exact_bound": _rational_json(bound),
        "gap": result.gap,
        "relative_gap": rel_gap,
        "within_tolerance": abs(rel_gap) <= cfg.tol,
        "argmax": {
            "gamma0": format_complex(result.argmax.gamma0),
            "gamma1": format_complex(result.argmax.gamma1),
            "gamma2": format_complex(result.argmax.gamma2),
        },
        "evaluations": result.evaluations,
        "converged": result.converged,
    }
    return (EXIT_OK if result.converged else EXIT_NONCONVERGED), report


def cmd_lemma(cfg: RunConfig) -> tuple[int, dict]:
    """Fuzz the coefficient inequality over sampled Schur parameters."""
    params = schwarz.sample_params(cfg.seed, cfg.samples)
    coeffs = [schwarz.schur_to_coeffs(g) for g in params]
    rows = []
    all_passed = True
    for mu, nu in schwarz.LEMMA_PAIRS:
        mu_f, nu_f = float(mu), float(nu)
        max_observed = max(schwarz.ps_functional(c, mu_f, nu_f) for c in coeffs)
        passed = max_observed <= abs(nu_f) + LEMMA_TOL
        all_passed = all_passed and passed
        rows.append(
            {
                "mu": _rational_json(mu),
                "nu": _rational_json(nu),
                "max_observed": max_observed,
                "nu_abs": abs(nu_f),
                "margin": abs(nu_f) - max_observed,
                "passed": passed,
            }
        )
    report = {
        "command": "lemma",
        "schema_version": SCHEMA_VERSION,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "tolerance": LEMMA_TOL,
        "rows": rows,
        "passed": all_passed,
    }
    return (EXIT_OK if all_passed else EXIT_VERIFY_FAIL), report


def cmd_invert(cfg: RunConfig) -> tuple[int, dict]:
    tail = [parse_complex(part) for part in cfg.coeffs.split(",") if part.strip()]
    if not tail:
        raise ValueError("need at least one coefficient")
    f = series.normalized(tail)
    g = series.reverse(f)
    inverse_tail = [complex(v) for v in g.coeffs[2:]]
    report = {
        "command": "invert",
        "schema_version": SCHEMA_VERSION,
        "order": f.order,
        "coeffs": [format_complex(v) for v in tail],
        "inverse": [format_complex(v) for v in inverse_tail],
    }
    return EXIT_OK, report


def cmd_compare(cfg: RunConfig) -> tuple[int, dict]:
    records = search.refutation_report(
        starts=cfg.starts, max_iters=cfg.iters, seed=cfg.seed
    )
    rows = []
    for record, verdict in records:
        bound = record.exact_bound
        gap = None
        if record.numeric_max is not None and bound is not None:
            gap = record.numeric_max - float(bound)
        rows.append(
            {
                "class": record.class_id.name,
                "functional": record.functional.name,
                "prior_claim": record.prior_claim,
                "exact_bound": None if bound is None else _rational_json(bound),
                "numeric_max": record.numeric_max,
                "gap": gap,
                "verdict": verdict.name,
                "witness": record.witness,
                "source": record.source,
            }
        )
    report = {
        "command": "compare",
        "schema_version": SCHEMA_VERSION,
        "starts": cfg.starts,
        "iters": cfg.iters,
        "seed": cfg.seed,
        "rows": rows,
    }
    return EXIT_OK, report


# --------------------------------------------------------------- rendering


def _text_verify(report: dict) -> str:
    lines = [f"extremal verification (tolerance {report['tolerance']:g})"]
    fmt = "{:<34} {:<9} {:<10} {:>22} {:>12} {:>10}"
    lines.append(fmt.format("label", "class", "functional", "attained", "bound", "|err|"))
    for row in report["rows"]:
        bound = Fraction(row["bound"]["num"], row["bound"]["den"])
        lines.append(
            fmt.format(
                row["label"],
                row["class"],
                row["functional"],
                f"{row['attained']:.16g}",
                _rational_text(bound),
                f"{row['abs_error']:.2e}",
            )
        )
    n = len(report["rows"])
    status = "passed" if report["passed"] else "FAILED"
    lines.append(f"{n} checks {status}, max |err| = {report['max_abs_error']:.3e}")
    return "\n".join(lines)


def _text_search(report: dict) -> str:
    bound = Fraction(report["exact_bound"]["num"], report["exact_bound"]["den"])
    arg = report["argmax"]
    return "\n".join(
        [
            f"search class={report['class']} functional={report['functional']} "
            f"seed={report['seed']} starts={report['starts']} iters={report['iters']}",
            f"best value   {report['best_value']:.15g}",
            f"exact bound  {_rational_text(bound)} = {float(bound):.15g}",
            f"gap          {report['gap']:.3e}  (relative {report['relative_gap']:.3e})",
            f"argmax       gamma0={arg['gamma0']} gamma1={arg['gamma1']} gamma2={arg['gamma2']}",
            f"evaluations  {report['evaluations']}",
            f"converged    {'yes' if report['converged'] else 'no'}",
        ]
    )


def _text_lemma(report: dict) -> str:
    lines = [
        f"coefficient inequality fuzz: {report['samples']} samples, seed {report['seed']}"
    ]
    fmt = "{:<12} {:<12} {:>22} {:>12} {:>12} {:>8}"
    lines.append(fmt.format("mu", "nu", "max observed", "|nu|", "margin", "ok"))
    for row in report["rows"]:
        mu = Fraction(row["mu"]["num"], row["mu"]["den"])
        nu = Fraction(row["nu"]["num"], row["nu"]["den"])
        lines.append(
            fmt.format(
                _rational_text(mu),
                _rational_text(nu),
                f"{row['max_observed']:.15g}",
                f"{row['nu_abs']:.10g}",
                f"{row['margin']:.3e}",
                "yes" if row["passed"] else "NO",
            )
        )
    lines.append("passed" if report["passed"] else "FAILED")
    return "\n".join(lines)


def _text_invert(report: dict) -> str:
    return ", ".join(report["inverse"])


def _text_compare(report: dict) -> str:
    lines = [
        f"bound comparison (starts={report['starts']}, iters={report['iters']}, "
        f"seed={report['seed']})"
    ]
    fmt = "{:<9} {:<10} {:>10} {:>12} {:>16} {:>11} {:<10}"
    lines.append(
        fmt.format("class", "functional", "prior", "corrected", "numeric max", "gap", "verdict")
    )
    for row in report["rows"]:
        if row["exact_bound"] is None:
            corrected = "(unchanged)"
        else:
            corrected = _rational_text(
                Fraction(row["exact_bound"]["num"], row["exact_bound"]["den"])
            )
        numeric = "-" if row["numeric_max"] is None else f"{row['numeric_max']:.10g}"
        gap = "-" if row["gap"] is None else f"{row['gap']:.2e}"
        lines.append(
            fmt.format(
                row["class"],
                row["functional"],
                f"{row['prior_claim']:g}",
                corrected,
                numeric,
                gap,
                row["verdict"],
            )
        )
    return "\n".join(lines)


_CSV_COLUMNS = {
    "verify-extremal": (
        "label", "class", "functional", "attained", "bound_num", "bound_den", "abs_error",
    ),
    "search": (
        "class", "functional", "seed", "starts", "iters", "best_value",
        "exact_bound_num", "exact_bound_den", "gap", "evaluations", "converged",
    ),
    "lemma": (
        "mu_num", "mu_den", "nu_num", "nu_den", "samples", "max_observed",
        "nu_abs", "margin", "passed",
    ),
    "invert": ("power", "coefficient"),
    "compare": (
        "class", "functional", "prior_claim", "exact_bound_num", "exact_bound_den",
        "numeric_max", "gap", "verdict",
    ),
}


def _csv_rows(report: dict) -> list[dict]:
    command = report["command"]
    if command == "verify-extremal":
        return [
            {
                "label": r["label"],
                "class": r["class"],
                "functional": r["functional"],
                "attained": repr(r["attained"]),
                "bound_num": r["bound"]["num"],
                "bound_den": r["bound"]["den"],
                "abs_error": repr(r["abs_error"]),
            }
            for r in report["rows"]
        ]
    if command == "search":
        return [
            {
                "class": report["class"],
                "functional": report["functional"],
                "seed": report["seed"],
                "starts": report["starts"],
                "iters": report["iters"],
                "best_value": repr(report["best_value"]),
                "exact_bound_num": report["exact_bound"]["num"],
                "exact_bound_den": report["exact_bound"]["den"],
                "gap": repr(report["gap"]),
                "evaluations": report["evaluations"],
                "converged": report["converged"],
            }
        ]
    if command == "lemma":
        return [
            {
                "mu_num": r["mu"]["num"],
                "mu_den": r["mu"]["den"],
                "nu_num": r["nu"]["num"],
                "nu_den": r["nu"]["den"],
                "samples": report["samples"],
                "max_observed": repr(r["max_observed"]),
                "nu_abs": repr(r["nu_abs"]),
                "margin": repr(r["margin"]),
                "passed": r["passed"],
            }
            for r in report["rows"]
        ]
    if command == "invert":
        return [
            {"power": k + 2, "coefficient": v}
            for k, v in enumerate(report["inverse"])
        ]
    return [
        {
            "class": r["class"],
            "functional": r["functional"],
            "prior_claim": r["prior_claim"],
            "exact_bound_num": "" if r["exact_bound"] is None else r["exact_bound"]["num"],
            "exact_bound_den": "" if r["exact_bound"] is None else r["exact_bound"]["den"],
            "numeric_max": "" if r["numeric_max"] is None else repr(r["numeric_max"]),
            "gap": "" if r["gap"] is None else repr(r["gap"]),
            "verdict": r["verdict"],
        }
        for r in report["rows"]
    ]


_TEXT_RENDERERS = {
    "verify-extremal": _text_verify,
    "search": _text_search,
    "lemma": _text_lemma,
    "invert": _text_invert,
    "compare": _text_compare,
}


def render_report(cfg: RunConfig, report: dict) -> str:
    if cfg.format == "json":
        return json.dumps(report, indent=2)
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS[report["command"]])
        writer.writeheader()
        writer.writerows(_csv_rows(report))
        return buf.getvalue().rstrip("\n")
    return _TEXT_RENDERERS[report["command"]](report)


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toepinv",
        description=(
            "Toeplitz and symmetric Toeplitz determinants of inverse univalent "
            "functions: extremal verification, sharp-bound search, coefficient "
            "inequality fuzzing, series inversion and bound comparison."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write the report to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-extremal", parents=[common],
                   help="check every catalog extremal against its exact bound")

    p_search = sub.add_parser("search", parents=[common],
                              help="maximize a determinant modulus over one class")
    p_search.add_argument("--class", dest="class_id", required=True,
                          choices=("r", "star", "convex"))
    p_search.add_argument("--functional", required=True,
                          choices=("ts22", "ts23", "ts32"))
    p_search.add_argument("--starts", type=int, default=64)
    p_search.add_argument("--iters", type=int, default=2000)
    p_search.add_argument("--tol", type=float, default=1e-4,
                          help="relative gap regarded as reaching the bound")

    p_lemma = sub.add_parser("lemma", parents=[common],
                             help="fuzz the Schwarz coefficient inequality")
    p_lemma.add_argument("--samples", type=int, default=100000)

    p_invert = sub.add_parser("invert", parents=[common],
                              help="invert z + a2 z^2 + ... given a2,a3,...")
    p_invert.add_argument("--coeffs", required=True,
                          help="comma separated a+bi coefficients, e.g. '2,3,4'")

    p_compare = sub.add_parser("compare", parents=[common],
                               help="table of prior claims vs corrected bounds")
    p_compare.add_argument("--starts", type=int, default=64)
    p_compare.add_argument("--iters", type=int, default=2000)

    return parser


_DISPATCH = {
    "verify-extremal": cmd_verify_extremal,
    "search": cmd_search,
    "lemma": cmd_lemma,
    "invert": cmd_invert,
    "compare": cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(command=args.command)
    cfg.format = args.format
    cfg.output_path = args.output
    cfg.seed = args.seed
    if args.command == "search":
        cfg.class_id = ClassId(args.class_id)
        cfg.functional = FunctionalId(args.functional)
        cfg.starts = args.starts
        cfg.iters = args.iters
        cfg.tol = args.tol
    elif args.command == "lemma":
        cfg.samples = args.samples
    elif args.command == "invert":
        cfg.coeffs = args.coeffs
    elif args.command == "compare":
        cfg.starts = args.starts
        cfg.iters = args.iters

    try:
        code, report = _DISPATCH[args.command](cfg)
    except ValueError as exc:
        parser.error(str(exc))  # raises SystemExit(2)
        return EXIT_USAGE

    rendered = render_report(cfg, report)
    if cfg.output_path:
        Path(cfg.output_path).write_text(rendered + "\n")
    else:
        print(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 argument error,
3 I/O error.  Machine output is JSON with exact integers only; rational
values appear as numerator/denominator pairs.  QRPAT_THREADS (>= 1)
caps the worker threads used by the verify subcommand.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import partial

from .parabola import (
    covering_members,
    evaluate_parabola,
    fraction_params,
    parabola_family,
    residues_near,
    verify_identity,
)
from .patterns import (
    bundle_parameter,
    denominator_set,
    layouts_equivalent,
    vertex_on_bundle,
)
from .render import overlay_predictions, render_scatter, render_sum_squares, write_pgm, write_svg
from .residues import ReducedFraction, farey_fractions, layout_period


def _fraction_arg(text: str) -> ReducedFraction:
    try:
        return ReducedFraction.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _emit(payload, compact: bool = False) -> None:
    if compact:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(json.dumps(payload, indent=2))


def _thread_cap() -> int:
    raw = os.environ.get("QRPAT_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _check_lambda_n(n: int) -> int:
    if n < 2:
        raise ValueError(f"--lambda-n must be >= 2, got {n}")
    return layout_period(n)


def _cmd_plot(args) -> int:
    canvas = render_scatter(args.modulus, args.width, args.height, args.half)
    write_pgm(canvas, args.out)
    return 0


def _cmd_grid(args) -> int:
    canvas = render_sum_squares(args.modulus, args.size)
    write_pgm(canvas, args.out)
    return 0


def _predict_payload(m: int, frac: ReducedFraction) -> dict:
    params = fraction_params(m, frac)
    family = parabola_family(params)
    return {
        "modulus": m,
        "fraction": {"a": frac.a, "b": frac.b},
        "b_prime": params.b_prime,
        "c": params.c,
        "alpha": params.alpha,
        "beta": params.beta,
        "x0": params.x0,
        "r0": params.r0,
        "vertices": [
            {
                "i": p.i,
                "a_prime": p.a_prime,
                "x_num": p.vertex_x.numerator,
                "x_den": p.vertex_x.denominator,
                "y_num": p.vertex_y.numerator,
                "y_den": p.vertex_y.denominator,
            }
            for p in family.members
        ],
        "coefficients": [
            {"i": p.i, "A": p.A, "B": p.B, "C": p.C} for p in family.members
        ],
    }


def _cmd_predict(args) -> int:
    if (args.fraction is None) == (args.max_denominator is None):
        raise ValueError("provide exactly one of --fraction or --max-denominator")
    if args.fraction is not None:
        payload = _predict_payload(args.modulus, args.fraction)
    else:
        payload = [
            _predict_payload(args.modulus, frac)
            for frac in farey_fractions(args.max_denominator)
        ]
    _emit(payload, compact=args.json)
    return 0


def _fraction_report(m: int, frac: ReducedFraction, window: int | None) -> dict:
    params = fraction_params(m, frac)
    family = parabola_family(params)
    b, b_prime = frac.b, params.b_prime

    structure = len(family.members) == b_prime
    abscissa = Fraction(frac.a * m, b)
    unit = Fraction(m, b * b)
    for p in family.members:
        structure = structure and p.vertex_x == abscissa
        structure = structure and 0 <= p.vertex_y < m and (p.vertex_y / unit).denominator == 1
    heights = sorted(p.vertex_y for p in family.members)
    gap = Fraction(m, b_prime)
    structure = structure and all(
        heights[i + 1] - heights[i] == gap for i in range(len(heights) - 1)
    )
    structure = structure and heights[0] + m - heights[-1] == gap

    span = window if window is not None else min(3 * b_prime, (m - 1) // 2)
    coverage = all(
        len(covering_members(family, x, r)) == 1 for x, r in residues_near(m, frac, span)
    )
    return {
        "fraction": str(frac),
        "identity": verify_identity(params),
        "family_structure": structure,
        "coverage": coverage,
    }


def _cmd_verify(args) -> int:
    m, max_d = args.modulus, args.max_denominator
    if m <= max_d * max_d:
        raise ValueError(f"modulus {m} must exceed max_denominator^2 = {max_d * max_d}")
    fractions = farey_fractions(max_d)
    check = partial(_fraction_report, m, window=args.window)
    cap = _thread_cap()
    if cap > 1:
        with ThreadPoolExecutor(max_workers=cap) as pool:
            reports = list(pool.map(check, fractions))
    else:
        reports = [check(frac) for frac in fractions]

    checks = {}
    failures = []
    for name in ("identity", "family_structure", "coverage"):
        passed = sum(1 for r in reports if r[name])
        checks[name] = {"passed": passed, "failed": len(reports) - passed}
        failures.extend(f"{r['fraction']}:{name}" for r in reports if not r[name])
    ok = not failures
    _emit(
        {
            "modulus": m,
            "max_denominator": max_d,
            "window": args.window,
            "fractions_checked": len(reports),
            "checks": checks,
            "failures": failures,
            "ok": ok,
        }
    )
    return 0 if ok else 1


def _cmd_equiv(args) -> int:
    period = _check_lambda_n(args.lambda_n)
    result = layouts_equivalent(args.m1, args.m2, period, args.max_denominator)
    _emit(
        {
            "m1": args.m1,
            "m2": args.m2,
            "lambda_n": args.lambda_n,
            "lambda": period,
            "max_denominator": args.max_denominator,
            "equivalent": result.equivalent,
            "witness": None
            if result.witness is None
            else {"a": result.witness.a, "b": result.witness.b},
        }
    )
    return 0


def _cmd_bundle(args) -> int:
    period = _check_lambda_n(args.lambda_n)
    m, max_d = args.modulus, args.max_denominator
    if m <= max_d * max_d:
        raise ValueError(f"modulus {m} must exceed max_denominator^2 = {max_d * max_d}")
    covered = denominator_set(period, max_d)
    per_fraction = []
    skipped = []
    indices: set[int] = set()
    for frac in sorted(farey_fractions(max_d), key=ReducedFraction.sort_key):
        if frac.b not in covered:
            print(
                f"warning: skipping {frac}: denominator {frac.b} is not covered "
                f"by period {period}",
                file=sys.stderr,
            )
            skipped.append({"a": frac.a, "b": frac.b})
            continue
        pairs = vertex_on_bundle(m, period, frac)
        indices.update(n for _, n in pairs)
        per_fraction.append(
            {
                "a": frac.a,
                "b": frac.b,
                "vertices": [{"k": k, "n": n} for k, n in pairs],
            }
        )
    if args.out:
        scene = overlay_predictions(m, max_d, period, args.width, args.height)
        write_svg(scene, args.out)
    _emit(
        {
            "modulus": m,
            "lambda_n": args.lambda_n,
            "lambda": period,
            "s": bundle_parameter(m, period),
            "max_denominator": max_d,
            "line_indices": sorted(indices),
            "fractions": per_fraction,
            "skipped": skipped,
        }
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrpat",
        description="Predict, verify, and render the parabola patterns of "
        "quadratic-residue plots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    plot = sub.add_parser("plot", help="scatter plot of x*x mod m as a PGM image")
    plot.add_argument("--modulus", type=_positive_int, required=True)
    plot.add_argument("--width", type=_positive_int, default=800)
    plot.add_argument("--height", type=_positive_int, default=800)
    plot.add_argument(
        "--half",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="plot only 0 <= x < m/2 (the rest mirrors it); default on",
    )
    plot.add_argument("--out", required=True, help="output PGM path")
    plot.set_defaults(handler=_cmd_plot)

    grid = sub.add_parser("grid", help="grayscale grid of (x*x + y*y) mod m as PGM")
    grid.add_argument("--modulus", type=_positive_int, required=True)
    grid.add_argument("--size", type=_positive_int, required=True)
    grid.add_argument("--out", required=True, help="output PGM path")
    grid.set_defaults(handler=_cmd_grid)

    predict = sub.add_parser(
        "predict", help="exact family parameters and vertices as JSON"
    )
    predict.add_argument("--modulus", type=_positive_int, required=True)
    predict.add_argument("--fraction", type=_fraction_arg, help="anchor fraction a/b")
    predict.add_argument(
        "--max-denominator", type=_positive_int, help="predict every anchor up to this b"
    )
    predict.add_argument(
        "--json", action="store_true", help="compact single-line JSON (default is indented)"
    )
    predict.set_defaults(handler=_cmd_predict)

    verify = sub.add_parser(
        "verify", help="run the brute-force oracles against every predicted family"
    )
    verify.add_argument("--modulus", type=_positive_int, required=True)
    verify.add_argument("--max-denominator", type=_positive_int, required=True)
    verify.add_argument(
        "--window",
        type=_positive_int,
        default=None,
        help="half-width of the oracle window around each anchor "
        "(default: 3 * b_prime per fraction)",
    )
    verify.set_defaults(handler=_cmd_verify)

    equiv = sub.add_parser(
        "equiv", help="compare the family layouts of two moduli"
    )
    equiv.add_argument("--m1", type=_positive_int, required=True)
    equiv.add_argument("--m2", type=_positive_int, required=True)
    equiv.add_argument("--lambda-n", type=_positive_int, default=9, dest="lambda_n")
    equiv.add_argument("--max-denominator", type=_positive_int, default=9)
    equiv.set_defaults(handler=_cmd_equiv)

    bundle = sub.add_parser(
        "bundle", help="match family vertices to the wrapped line bundle"
    )
    bundle.add_argument("--modulus", type=_positive_int, required=True)
    bundle.add_argument("--lambda-n", type=_positive_int, default=9, dest="lambda_n")
    bundle.add_argument("--max-denominator", type=_positive_int, default=9)
    bundle.add_argument("--out", default=None, help="optional SVG overlay path")
    bundle.add_argument("--width", type=_positive_int, default=800)
    bundle.add_argument("--height", type=_positive_int, default=800)
    bundle.set_defaults(handler=_cmd_bundle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line frontend: solve one polynomial, run batch files, compare methods.

Exit codes: 0 success, 1 parse or file error, 2 input is not a cubic (and
quadratics were not allowed), 3 methods disagree beyond the tolerance.
All output is deterministic; timings are the only nondeterministic fields
and are suppressed by --no-timing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import classic, fe, oracle
from .parsing import ParseError, parse
from .poly import Cubic, Quadratic, evaluate_quadratic

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DEGREE = 2
EXIT_DISAGREE = 3

_METHODS = ("fe", "classic", "oracle")

_QUADRATIC_TAGS = {1: "two_real_distinct", 0: "double_root", -1: "complex_pair"}


def _fmt_real(x: float) -> str:
    """Text rendering at 12 significant digits.

    A value prints as a bare integer only when it is bit-exactly that
    integer; when rounding to 12 digits would masquerade a non-integer as
    one, the full 17-digit form is used instead.
    """
    if x == int(x):
        return str(int(x))
    rendered = f"{x:.12g}"
    if float(rendered) == int(float(rendered)):
        rendered = f"{x:.17g}"
    return rendered


def _fmt_complex(value: complex) -> str:
    if value.imag == 0.0:
        return _fmt_real(value.real)
    sign = "+" if value.imag >= 0 else "-"
    return f"{_fmt_real(value.real)} {sign} {_fmt_real(abs(value.imag))}i"


class _InputError(Exception):
    """Input rejected before solving; carries the exit code."""

    def __init__(self, exit_code: int, message: str, parse_error: ParseError | None = None, source: str = ""):
        super().__init__(message)
        self.exit_code = exit_code
        self.parse_error = parse_error
        self.source = source


def _coefficients_from_text(raw: str) -> list[float]:
    parts = [piece.strip() for piece in raw.split(",")]
    try:
        values = [float(piece) for piece in parts]
    except ValueError:
        raise _InputError(EXIT_PARSE, f"could not parse --coeffs value {raw!r}")
    if len(values) < 2:
        raise _InputError(EXIT_PARSE, "--coeffs needs at least two comma-separated values")
    return values


def _gate_polynomial(ascending: list[float], allow_quadratic: bool) -> Cubic | Quadratic:
    """Apply the cubic degree gate to an ascending coefficient vector."""
    degree = len(ascending) - 1
    if degree == 3:
        return Cubic(a=ascending[3], b=ascending[2], c=ascending[1], d=ascending[0])
    if degree == 2 and allow_quadratic:
        return Quadratic(a=ascending[2], b=ascending[1], c=ascending[0])
    if degree == 2:
        raise _InputError(
            EXIT_DEGREE,
            "input is a quadratic, not a cubic; pass --allow-quadratic to solve it",
        )
    raise _InputError(EXIT_DEGREE, f"input has degree {degree}, expected a cubic")


def _trim_descending(descending: list[float]) -> list[float]:
    trimmed = list(descending)
    while len(trimmed) > 1 and trimmed[0] == 0.0:
        trimmed.pop(0)
    return trimmed


def _resolve_polynomial(
    expression: str | None, coeffs: str | None, allow_quadratic: bool
) -> tuple[str, list[float], Cubic | Quadratic]:
    """Turn CLI input into (source text, ascending coefficients, polynomial)."""
    if (expression is None) == (coeffs is None):
        raise _InputError(
            EXIT_PARSE, "provide exactly one polynomial: an expression or --coeffs"
        )
    if coeffs is not None:
        descending = _trim_descending(_coefficients_from_text(coeffs))
        ascending = list(reversed(descending))
        source = coeffs
    else:
        assert expression is not None
        try:
            parsed = parse(expression, max_degree=3)
        except ParseError as error:
            raise _InputError(
                EXIT_PARSE, str(error), parse_error=error, source=expression
            )
        ascending = list(parsed.coefficients)
        source = expression
    return source, ascending, _gate_polynomial(ascending, allow_quadratic)


def _roots_json(roots: Sequence[complex]) -> list[dict[str, float]]:
    return [{"re": r.real, "im": r.imag} for r in roots]


def _solve_with_method(
    cubic: Cubic, method: str, options: fe.SolveOptions
) -> fe.RootSet:
    if method == "fe":
        return fe.solve(cubic, options)
    if method == "classic":
        return classic.solve_classic(cubic)
    if method == "oracle":
        values = oracle.durand_kerner([cubic.a, cubic.b, cubic.c, cubic.d])
        return fe.root_set_from_values(cubic, values)
    raise ValueError(f"unknown method {method!r}")


def _cubic_report(
    source: str,
    ascending: list[float],
    cubic: Cubic,
    method: str,
    options: fe.SolveOptions,
    with_timing: bool,
) -> dict:
    point = fe.inflection_point(cubic)
    invariants = fe.reduced_invariants(point)
    started = time.perf_counter()
    root_set = _solve_with_method(cubic, method, options)
    elapsed_us = (time.perf_counter() - started) * 1e6
    report = {
        "input": {"source": source, "coefficients_ascending": ascending},
        "method": method,
        "degree": 3,
        "z": point.z,
        "fz": point.fz,
        "fpz": point.fpz,
        "Q": invariants.Q,
        "R": invariants.R,
        "D": invariants.D,
        "classification": root_set.classification.value,
        "roots": _roots_json(root_set.roots),
        "residuals": list(root_set.residuals),
    }
    if with_timing:
        report["elapsed_us"] = elapsed_us
    return report


def _quadratic_report(
    source: str,
    ascending: list[float],
    quadratic: Quadratic,
    with_timing: bool,
) -> dict:
    z = -quadratic.b / (2.0 * quadratic.a)
    fz = evaluate_quadratic(quadratic, z) / quadratic.a
    discriminant_value = -fz
    started = time.perf_counter()
    roots = fe.solve_quadratic(quadratic)
    elapsed_us = (time.perf_counter() - started) * 1e6
    scale = max(abs(quadratic.a), abs(quadratic.b), abs(quadratic.c))
    residuals = [
        abs(evaluate_quadratic(quadratic, r)) / (scale * max(1.0, abs(r)) ** 2)
        for r in roots
    ]
    if discriminant_value > 0:
        tag = _QUADRATIC_TAGS[1]
    elif discriminant_value < 0:
        tag = _QUADRATIC_TAGS[-1]
    else:
        tag = _QUADRATIC_TAGS[0]
    report = {
        "input": {"source": source, "coefficients_ascending": ascending},
        "method": "fe",
        "degree": 2,
        "z": z,
        "fz": fz,
        "discriminant": discriminant_value,
        "classification": tag,
        "roots": _roots_json(roots),
        "residuals": residuals,
    }
    if with_timing:
        report["elapsed_us"] = elapsed_us
    return report


def _canonical(roots: Sequence[complex]) -> list[complex]:
    return sorted(roots, key=lambda r: (-r.real, -r.imag))


def _max_pairwise_distance(root_lists: list[list[complex]]) -> float:
    worst = 0.0
    for i in range(len(root_lists)):
        for j in range(i + 1, len(root_lists)):
            for left, right in zip(root_lists[i], root_lists[j]):
                worst = max(worst, abs(left - right))
    return worst


def _all_methods_report(
    source: str,
    ascending: list[float],
    cubic: Cubic,
    options: fe.SolveOptions,
    with_timing: bool,
) -> dict:
    reports = {}
    collected: list[list[complex]] = []
    for method in _METHODS:
        try:
            report = _cubic_report(source, ascending, cubic, method, options, with_timing)
        except oracle.NonConvergenceError as error:
            reports[method] = {"method": method, "error": str(error)}
            continue
        reports[method] = report
        collected.append(_canonical([complex(r["re"], r["im"]) for r in report["roots"]]))
    return {
        "input": {"source": source, "coefficients_ascending": ascending},
        "method": "all",
        "reports": reports,
        "max_pairwise_root_distance": _max_pairwise_distance(collected),
    }


def _render_text_report(report: dict, out) -> None:
    source = report["input"]["source"]
    coeffs = ", ".join(_fmt_real(c) for c in report["input"]["coefficients_ascending"])
    out.write(f"input: {source}\n")
    out.write(f"coefficients (ascending powers): [{coeffs}]\n")
    out.write(f"method: {report['method']}\n")
    if report.get("degree") == 2:
        out.write(
            f"z = {_fmt_real(report['z'])}, f(z)/a = {_fmt_real(report['fz'])}, "
            f"discriminant = {_fmt_real(report['discriminant'])}\n"
        )
    else:
        out.write(
            f"z = {_fmt_real(report['z'])}, f(z)/a = {_fmt_real(report['fz'])}, "
            f"f'(z)/a = {_fmt_real(report['fpz'])}\n"
        )
        out.write(
            f"Q = {_fmt_real(report['Q'])}, R = {_fmt_real(report['R'])}, "
            f"D = {_fmt_real(report['D'])}\n"
        )
    out.write(f"classification: {report['classification']}\n")
    out.write("roots:\n")
    for index, root in enumerate(report["roots"], start=1):
        out.write(f"  x{index} = {_fmt_complex(complex(root['re'], root['im']))}\n")
    residuals = ", ".join(f"{r:.3e}" for r in report["residuals"])
    out.write(f"residuals: [{residuals}]\n")
    if "elapsed_us" in report:
        out.write(f"elapsed: {report['elapsed_us']:.1f} us\n")


def _render_text_all(report: dict, out) -> None:
    out.write(f"input: {report['input']['source']}\n")
    for method in _METHODS:
        method_report = report["reports"][method]
        out.write(f"--- {method} ---\n")
        if "error" in method_report:
            out.write(f"error: {method_report['error']}\n")
            continue
        out.write(f"classification: {method_report['classification']}\n")
        for index, root in enumerate(method_report["roots"], start=1):
            out.write(
                f"  x{index} = {_fmt_complex(complex(root['re'], root['im']))}\n"
            )
        residuals = ", ".join(f"{r:.3e}" for r in method_report["residuals"])
        out.write(f"residuals: [{residuals}]\n")
        if "elapsed_us" in method_report:
            out.write(f"elapsed: {method_report['elapsed_us']:.1f} us\n")
    out.write(
        f"max pairwise root distance: {report['max_pairwise_root_distance']:.3e}\n"
    )


def _print_input_error(error: _InputError) -> None:
    sys.stderr.write(f"error: {error}\n")
    if error.parse_error is not None:
        sys.stderr.write(f"  {error.source}\n")
        sys.stderr.write("  " + " " * error.parse_error.position + "^\n")


def _options_from_args(args: argparse.Namespace) -> fe.SolveOptions:
    return fe.SolveOptions(polish=not args.no_polish, tol_d=args.tol_d)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        source, ascending, polynomial = _resolve_polynomial(
            args.expression, args.coeffs, args.allow_quadratic
        )
    except _InputError as error:
        _print_input_error(error)
        return error.exit_code
    options = _options_from_args(args)
    with_timing = not args.no_timing
    if isinstance(polynomial, Quadratic):
        report = _quadratic_report(source, ascending, polynomial, with_timing)
    elif args.method == "all":
        report = _all_methods_report(source, ascending, polynomial, options, with_timing)
    else:
        try:
            report = _cubic_report(
                source, ascending, polynomial, args.method, options, with_timing
            )
        except oracle.NonConvergenceError as error:
            sys.stderr.write(f"error: {error}\n")
            return EXIT_PARSE
    if args.format == "json":
        sys.stdout.write(json.dumps(report) + "\n")
    elif report.get("method") == "all":
        _render_text_all(report, sys.stdout)
    else:
        _render_text_report(report, sys.stdout)
    return EXIT_OK


def _batch_line_result(
    line: str, line_number: int, args: argparse.Namespace, options: fe.SolveOptions
) -> dict:
    record = json.loads(line)
    if not isinstance(record, dict):
        raise ValueError(f"line {line_number}: expected a JSON object")
    identifier = record.get("id")
    result: dict = {}
    if identifier is not None:
        result["id"] = identifier

    def embed_error(kind: str, message: str, position: int | None = None) -> dict:
        error: dict = {"kind": kind, "message": message}
        if position is not None:
            error["position"] = position
        result["error"] = error
        return result

    has_poly = "poly" in record
    has_coeffs = "coeffs" in record
    if has_poly == has_coeffs:
        return embed_error(
            "bad_line", 'each line needs exactly one of "poly" or "coeffs"'
        )
    try:
        if has_poly:
            source, ascending, polynomial = _resolve_polynomial(
                str(record["poly"]), None, args.allow_quadratic
            )
        else:
            raw = record["coeffs"]
            if not isinstance(raw, list):
                return embed_error("bad_line", '"coeffs" must be a list of numbers')
            descending = _trim_descending([float(c) for c in raw])
            ascending = list(reversed(descending))
            source = ",".join(repr(c) for c in descending)
            polynomial = _gate_polynomial(ascending, args.allow_quadratic)
    except _InputError as error:
        if error.parse_error is not None:
            return embed_error(
                error.parse_error.kind.value,
                error.parse_error.message,
                error.parse_error.position,
            )
        kind = "not_cubic" if error.exit_code == EXIT_DEGREE else "bad_line"
        return embed_error(kind, str(error))
    except (TypeError, ValueError) as error:
        return embed_error("bad_line", str(error))
    with_timing = not args.no_timing
    if isinstance(polynomial, Quadratic):
        report = _quadratic_report(source, ascending, polynomial, with_timing)
    else:
        try:
            report = _cubic_report(
                source, ascending, polynomial, args.method, options, with_timing
            )
        except oracle.NonConvergenceError as error:
            return embed_error("non_convergence", str(error))
    result.update(report)
    return result


def cmd_batch(args: argparse.Namespace) -> int:
    options = _options_from_args(args)
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as error:
        sys.stderr.write(f"error: cannot read {args.input}: {error}\n")
        return EXIT_PARSE

    numbered = [
        (index, line) for index, line in enumerate(lines, start=1) if line.strip()
    ]

    def worker(item: tuple[int, str]) -> dict:
        index, line = item
        return _batch_line_result(line, index, args, options)

    try:
        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(worker, numbered))
        else:
            results = [worker(item) for item in numbered]
    except ValueError as error:
        sys.stderr.write(f"error: malformed batch file: {error}\n")
        return EXIT_PARSE

    counts: dict[str, int] = {tag.value: 0 for tag in fe.Classification}
    max_residual = None
    error_count = 0
    for result in results:
        if "error" in result:
            error_count += 1
            continue
        tag = result["classification"]
        counts[tag] = counts.get(tag, 0) + 1
        peak = max(result["residuals"])
        max_residual = peak if max_residual is None else max(max_residual, peak)
    summary = {
        "summary": {
            "lines": len(results),
            "errors": error_count,
            "classifications": counts,
            "max_residual": max_residual,
        }
    }

    payload = "".join(json.dumps(result) + "\n" for result in results)
    payload += json.dumps(summary) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(payload)
        except OSError as error:
            sys.stderr.write(f"error: cannot write {args.output}: {error}\n")
            return EXIT_PARSE
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    try:
        source, ascending, polynomial = _resolve_polynomial(
            args.expression, args.coeffs, allow_quadratic=False
        )
    except _InputError as error:
        _print_input_error(error)
        return error.exit_code
    assert isinstance(polynomial, Cubic)
    options = _options_from_args(args)
    report = _all_methods_report(
        source, ascending, polynomial, options, not args.no_timing
    )
    distance = report["max_pairwise_root_distance"]
    agree = distance <= args.agree_tol
    report["agree_tol"] = args.agree_tol
    report["agree"] = agree
    if args.format == "json":
        sys.stdout.write(json.dumps(report) + "\n")
    else:
        _render_text_all(report, sys.stdout)
        out = "ok" if agree else "DISAGREE"
        sys.stdout.write(f"agreement (tol {args.agree_tol:g}): {out}\n")
    return EXIT_OK if agree else EXIT_DISAGREE


def _add_polynomial_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "expression", nargs="?", default=None,
        help='polynomial text, e.g. "x^3 - 6x^2 + 11x - 6"',
    )
    parser.add_argument(
        "--coeffs", default=None,
        help="comma-separated coefficients in descending powers, e.g. 1,-6,11,-6",
    )


def _add_solver_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--no-polish", action="store_true",
        help="skip the Newton polishing steps",
    )
    parser.add_argument(
        "--tol-d", type=float, default=1e-12, metavar="FLOAT",
        help="relative threshold for treating the discriminant as zero",
    )
    parser.add_argument(
        "--no-timing", action="store_true",
        help="omit elapsed-time fields (output becomes reproducible byte for byte)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feroots",
        description="Solve cubic equations in closed form from the function "
        "value and derivative at the inflection point.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve_parser = commands.add_parser("solve", help="solve a single polynomial")
    _add_polynomial_arguments(solve_parser)
    _add_solver_arguments(solve_parser)
    solve_parser.add_argument(
        "--method", choices=("fe", "classic", "oracle", "all"), default="fe",
        help="which solver to run",
    )
    solve_parser.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report format",
    )
    solve_parser.add_argument(
        "--allow-quadratic", action="store_true",
        help="solve quadratics instead of rejecting them with exit code 2",
    )
    solve_parser.set_defaults(func=cmd_solve)

    batch_parser = commands.add_parser(
        "batch", help="solve a JSON-lines file of polynomials"
    )
    batch_parser.add_argument("--input", required=True, help="JSON-lines input file")
    batch_parser.add_argument(
        "--output", default=None, help="output file (defaults to stdout)"
    )
    batch_parser.add_argument(
        "--method", choices=("fe", "classic", "oracle"), default="fe",
        help="which solver to run on every line",
    )
    batch_parser.add_argument(
        "--jobs", type=int, default=1, metavar="N",
        help="parallel workers; output order always matches input order",
    )
    batch_parser.add_argument(
        "--allow-quadratic", action="store_true",
        help="solve quadratic lines instead of embedding an error",
    )
    _add_solver_arguments(batch_parser)
    batch_parser.set_defaults(func=cmd_batch)

    compare_parser = commands.add_parser(
        "compare", help="run every method on one cubic and compare the roots"
    )
    _add_polynomial_arguments(compare_parser)
    _add_solver_arguments(compare_parser)
    compare_parser.add_argument(
        "--agree-tol", type=float, default=1e-8, metavar="FLOAT",
        help="maximum pairwise root distance still counted as agreement",
    )
    compare_parser.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report format",
    )
    compare_parser.set_defaults(func=cmd_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())

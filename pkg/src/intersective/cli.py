"""Command-line interface.

Subcommands: scan, cover, realroots, census, check, density.  Output is
JSON by default (--format json|tsv|text).  Exit codes: 0 on success
(a fails-to-cover verdict is a success), 2 on usage or input errors,
3 if an internal cross-check fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import reports
from .parse import (
    FormParseError,
    PolyParseError,
    parse_form,
    parse_poly,
    read_forms_file,
)
from .primes import PrimeRange
from .quadcover import (
    QuadForm,
    decide_cover,
    exact_root_distribution,
    product_polynomial,
)
from .scanner import (
    DEFAULT_SCAN_CAP,
    HARD_SCAN_CAP,
    MIN_DENSITY_RANGE_END,
    InvariantViolation,
    RealRootCheck,
    check_real_roots,
    check_real_roots_forms,
    compare_densities,
    scan,
)
from .sturm import count_real_roots, isolate_real_roots


class UsageError(ValueError):
    pass


def _add_range_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--from", dest="lo", type=int, default=2, metavar="LO")
    sub.add_argument("--to", dest="hi", type=int, required=True, metavar="HI")
    sub.add_argument("--cap", type=int, default=DEFAULT_SCAN_CAP)


def _add_format_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "tsv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intersective",
        description="Root counts of integer polynomials mod p, real-root "
        "certificates, and covering analysis of quadratic forms.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_scan = subs.add_parser("scan", help="histogram root counts over a prime range")
    p_scan.add_argument("--poly", required=True)
    _add_range_args(p_scan)
    p_scan.add_argument("--cycle-types", action="store_true")
    _add_format_arg(p_scan)

    p_cover = subs.add_parser("cover", help="decide covering for quadratic forms")
    p_cover.add_argument("--form", action="append", default=[])
    p_cover.add_argument("--forms-file")
    _add_format_arg(p_cover)

    p_real = subs.add_parser("realroots", help="count and isolate real roots")
    p_real.add_argument("--poly", required=True)
    p_real.add_argument("--precision", type=int, default=20, metavar="K",
                        help="isolating interval width at most 2^-K")
    _add_format_arg(p_real)

    p_census = subs.add_parser("census", help="cycle-type census over a prime range")
    p_census.add_argument("--poly", required=True)
    _add_range_args(p_census)
    _add_format_arg(p_census)

    p_check = subs.add_parser(
        "check", help="minimum root count mod p against the real-root count"
    )
    p_check.add_argument("--poly")
    p_check.add_argument("--form", action="append", default=[])
    p_check.add_argument("--forms-file")
    _add_range_args(p_check)
    _add_format_arg(p_check)

    p_density = subs.add_parser(
        "density", help="exact root-count distribution for quadratic forms"
    )
    p_density.add_argument("--form", action="append", default=[])
    p_density.add_argument("--forms-file")
    _add_format_arg(p_density)

    return parser


def _collect_forms(args: argparse.Namespace) -> list[QuadForm]:
    forms = [parse_form(text) for text in args.form]
    if args.forms_file:
        forms.extend(read_forms_file(args.forms_file))
    if not forms:
        raise UsageError("at least one --form or a --forms-file is required")
    return forms


def _make_range(args: argparse.Namespace) -> PrimeRange:
    cap = min(args.cap, HARD_SCAN_CAP)
    if args.hi > cap:
        raise UsageError(
            f"range end {args.hi} exceeds the cap {cap}; raise --cap "
            f"(hard limit {HARD_SCAN_CAP})"
        )
    try:
        return PrimeRange(args.lo, args.hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _nonconstant_poly(text: str):
    f = parse_poly(text)
    if f.is_zero or f.degree < 1:
        raise UsageError(f"polynomial {text!r} must have degree at least 1")
    return f


def _emit(args: argparse.Namespace, json_obj, text: str, tsv: str | None = None) -> None:
    if args.format == "json":
        print(reports.dumps(json_obj))
    elif args.format == "tsv":
        print(tsv if tsv is not None else text)
    else:
        print(text)


def _cmd_scan(args: argparse.Namespace) -> None:
    f = _nonconstant_poly(args.poly)
    rng = _make_range(args)
    report = scan(f, rng, with_cycle_types=args.cycle_types)
    _emit(
        args,
        reports.scan_report_json(report),
        reports.scan_report_text(report),
        reports.scan_report_tsv(report),
    )


def _cmd_cover(args: argparse.Namespace) -> None:
    forms = _collect_forms(args)
    verdict = decide_cover(forms)
    _emit(
        args,
        reports.cover_verdict_json(verdict, forms),
        reports.cover_verdict_text(verdict, forms),
    )


def _cmd_realroots(args: argparse.Namespace) -> None:
    f = _nonconstant_poly(args.poly)
    if args.precision < 0 or args.precision > 10**4:
        raise UsageError("--precision must be between 0 and 10000")
    intervals = isolate_real_roots(f, Fraction(1, 2**args.precision))
    _emit(
        args,
        reports.intervals_json(f, intervals),
        reports.intervals_text(f, intervals),
    )


def _cmd_census(args: argparse.Namespace) -> None:
    f = _nonconstant_poly(args.poly)
    rng = _make_range(args)
    report = scan(f, rng, with_cycle_types=True)
    _emit(
        args,
        reports.scan_report_json(report),
        reports.scan_report_text(report),
        reports.scan_report_tsv(report),
    )


def _cmd_check(args: argparse.Namespace) -> None:
    has_poly = args.poly is not None
    has_forms = bool(args.form) or bool(args.forms_file)
    if has_poly == has_forms:
        raise UsageError("check needs exactly one of --poly or --form/--forms-file")
    rng = _make_range(args)
    if has_poly:
        f = _nonconstant_poly(args.poly)
        check = check_real_roots(f, rng)
        obj = reports.real_root_check_json(check)
        obj["density_table"] = None
        obj["max_abs_deviation"] = None
        text = (
            f"mode: {check.mode}\n"
            f"minimum roots observed: {check.min_roots_observed}\n"
            f"distinct real roots: {check.real_root_count}\n"
            f"verdict: {check.verdict}"
        )
        _emit(args, obj, text)
        return
    forms = _collect_forms(args)
    if rng.hi >= MIN_DENSITY_RANGE_END:
        comparison, report, dist = compare_densities(forms, rng)
        real = count_real_roots(product_polynomial(forms))
        verdict = "consistent" if real >= dist.min_roots else "inconsistent"
        check = RealRootCheck(
            report.min_roots_observed, real, dist.min_roots, verdict, "exact"
        )
        obj = reports.real_root_check_json(check)
        obj["density_table"] = reports.density_rows_json(comparison)
        obj["max_abs_deviation"] = reports.decimal6(comparison.max_abs_deviation)
        text = (
            f"mode: {check.mode}\n"
            f"exact minimum roots over classes: {check.exact_min_roots}\n"
            f"minimum roots observed: {check.min_roots_observed}\n"
            f"distinct real roots: {check.real_root_count}\n"
            f"verdict: {check.verdict}\n"
            + reports.density_comparison_text(comparison)
        )
        _emit(args, obj, text)
    else:
        check, _report, _dist = check_real_roots_forms(forms, rng)
        obj = reports.real_root_check_json(check)
        obj["density_table"] = None
        obj["max_abs_deviation"] = None
        text = (
            f"mode: {check.mode}\n"
            f"exact minimum roots over classes: {check.exact_min_roots}\n"
            f"minimum roots observed: {check.min_roots_observed}\n"
            f"distinct real roots: {check.real_root_count}\n"
            f"verdict: {check.verdict}"
        )
        _emit(args, obj, text)


def _cmd_density(args: argparse.Namespace) -> None:
    forms = _collect_forms(args)
    dist = exact_root_distribution(forms)
    obj = reports.distribution_json(dist)
    lines = [
        f"square-class rank: {dist.rank}",
        f"minimum roots over classes: {dist.min_roots}",
    ]
    for k, v in dist.densities.items():
        lines.append(f"  roots={k}: {reports.rational_str(v)} = {reports.decimal6(v)}")
    _emit(args, obj, "\n".join(lines))


_COMMANDS = {
    "scan": _cmd_scan,
    "cover": _cmd_cover,
    "realroots": _cmd_realroots,
    "census": _cmd_census,
    "check": _cmd_check,
    "density": _cmd_density,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (UsageError, PolyParseError, FormParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

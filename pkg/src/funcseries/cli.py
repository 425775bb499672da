"""Command-line front end: table, figures, coeffs, eval, radius, compare.

All numeric output is deterministic: floats are printed as their shortest
round-trip decimal padded to 17 significant digits, CSV uses LF line
endings and a header row, and grids come from numpy.linspace on the
parsed start:stop:count triple.  Exit codes: 0 success, 1 usage error,
2 domain or convergence failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .approx import (
    BUILTIN_FUNCTIONS,
    FunctionSpec,
    assemble,
    builtin_function,
    error_report,
    estimate_radius,
    evaluate,
    format_decimal,
    function_from_derivatives,
    taylor_baseline,
)
from .catalog import ConvergenceError, DomainError, get_expansion, map_domain
from .pseries import FAMILY_KEYS

__all__ = ["main", "RunConfig", "UsageError"]


class UsageError(Exception):
    """Bad command line or config file content."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; this project reserves 2
    # for domain failures, so parsing problems are rethrown as UsageError
    # and mapped to exit code 1 in main().
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command plus its validated inputs."""

    command: str
    expansions: tuple = ()  # family keys, possibly including "tp"
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    w: Optional[Fraction] = None
    function: Optional[str] = None
    terms: int = 8
    at: Optional[float] = None
    grid: Optional[tuple] = None  # (start, stop, count)
    out: Optional[str] = None
    fmt: str = "csv"
    n_list: tuple = (3, 7, 10, 20)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError(f"not a rational number: {text!r}") from err


def _parse_point(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(text)
    except ValueError as err:
        raise UsageError(f"not a number: {text!r}") from err


def _parse_grid(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:count, got {text!r}")
    start = _parse_point(parts[0])
    stop = _parse_point(parts[1])
    try:
        count = int(parts[2])
    except ValueError as err:
        raise UsageError(f"grid count must be an integer, got {parts[2]!r}") from err
    if count < 1:
        raise UsageError("grid count must be at least 1")
    if start > stop:
        raise UsageError("grid start must not exceed stop")
    return (start, stop, count)


def _parse_n_list(text: str) -> tuple:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            n = int(piece)
        except ValueError as err:
            raise UsageError(f"--n-list entries must be integers, got {piece!r}") from err
        if n < 1:
            raise UsageError("--n-list entries must be at least 1")
        out.append(n)
    if not out:
        raise UsageError("--n-list must not be empty")
    return tuple(out)


def _load_function(spec_text: str) -> FunctionSpec:
    """Resolve --function: a builtin name, pow:RATIONAL, or a derivative file."""
    if spec_text in ("exp", "sin", "sq", "ln1p"):
        return builtin_function(spec_text)
    if spec_text == "pow":
        raise UsageError("builtin 'pow' needs an exponent, e.g. pow:1/5")
    if spec_text.startswith("pow:"):
        return builtin_function("pow", alpha=_parse_rational(spec_text[4:]))
    if os.path.exists(spec_text):
        values = []
        with open(spec_text, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                try:
                    values.append(Fraction(line))
                except (ValueError, ZeroDivisionError) as err:
                    raise UsageError(
                        f"{spec_text}:{lineno}: not a rational number: {line!r}"
                    ) from err
        if not values:
            raise UsageError(f"{spec_text}: no derivative values found")
        name = os.path.splitext(os.path.basename(spec_text))[0]
        return function_from_derivatives(values, name=name)
    raise UsageError(
        f"unknown function {spec_text!r}: expected one of "
        f"{', '.join(BUILTIN_FUNCTIONS)} (pow as pow:RATIONAL) or a readable "
        "derivative file"
    )


def _build_model(key: str, config: RunConfig, func: FunctionSpec):
    if key == "tp":
        return taylor_baseline(func, config.terms)
    exp = get_expansion(key, alpha=config.alpha, beta=config.beta, w=config.w)
    return assemble(exp, func, config.terms)


def _open_out(config: RunConfig):
    if config.out is None:
        return sys.stdout, False
    return open(config.out, "w", encoding="utf-8", newline=""), True


def _write_csv(config: RunConfig, header, rows):
    fh, owned = _open_out(config)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if owned:
            fh.close()


def _write_text(config: RunConfig, text: str):
    fh, owned = _open_out(config)
    try:
        fh.write(text)
    finally:
        if owned:
            fh.close()


def _grid_points(config: RunConfig):
    start, stop, count = config.grid
    return [float(x) for x in np.linspace(start, stop, count)]


# -- commands ------------------------------------------------------------------


def _cmd_table(config: RunConfig) -> int:
    func = builtin_function("ln1p")
    x = 0.5
    exact = math.log1p(x)
    a8 = get_expansion("a8")
    rows = []
    for n in config.n_list:
        delta_a8 = abs(evaluate(assemble(a8, func, n), x) - exact)
        delta_tp = abs(evaluate(taylor_baseline(func, n), x) - exact)
        rows.append([str(n), format_decimal(delta_a8), format_decimal(delta_tp)])
    _write_csv(config, ["N", "delta_a8", "delta_tp"], rows)
    return 0


_FIGURE_FUNCTIONS = ("exp", "sin", "sq", "ln1p")
_FIGURE_FAMILIES = tuple(f"a{i}" for i in range(1, 14)) + ("tp",)


def _cmd_figures(config: RunConfig) -> int:
    out_dir = config.out if config.out is not None else "figures"
    os.makedirs(out_dir, exist_ok=True)
    xs = _grid_points(config)
    manifest = []

    def emit(filename, header, rows, func_name, family):
        path = os.path.join(out_dir, filename)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        kept = [float(r[0]) for r in rows]
        manifest.append([
            func_name, family, filename, str(len(rows)),
            format_decimal(min(kept)) if kept else "nan",
            format_decimal(max(kept)) if kept else "nan",
        ])

    for func_name in _FIGURE_FUNCTIONS:
        func = builtin_function(func_name)
        for family in _FIGURE_FAMILIES:
            model = _build_model(family, config, func)
            rows = []
            for point in error_report(model, xs):
                if point.note or math.isnan(point.exact):
                    continue  # outside the family's or the target's domain
                rows.append([
                    format_decimal(point.x),
                    format_decimal(point.approx),
                    format_decimal(point.exact),
                ])
            emit(
                f"{func_name}_{family}.csv", ["x", "approx", "exact"],
                rows, func_name, family,
            )

    # The fifth-root experiment: one file, both approximants side by side.
    func = builtin_function("pow", alpha=Fraction(1, 5))
    a5 = assemble(get_expansion("a5", alpha=2), func, config.terms)
    tp = taylor_baseline(func, config.terms)
    rows = []
    for x in [float(v) for v in np.linspace(-1.0, 6.0, 281)]:
        rows.append([
            format_decimal(x),
            format_decimal(evaluate(a5, x)),
            format_decimal(evaluate(tp, x)),
            format_decimal(func.value_at(x)),
        ])
    emit(
        "fifth_root.csv", ["x", "approx_a5", "approx_tp", "exact"],
        rows, func.name, "a5",
    )

    with open(os.path.join(out_dir, "manifest.csv"), "w", encoding="utf-8",
              newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["function", "expansion", "file", "points", "x_lo", "x_hi"])
        writer.writerows(manifest)
    return 0


def _require_single_expansion(config: RunConfig) -> str:
    if len(config.expansions) != 1:
        raise UsageError("this command takes exactly one --expansion")
    return config.expansions[0]


def _cmd_coeffs(config: RunConfig) -> int:
    key = _require_single_expansion(config)
    func = _load_function(config.function)
    model = _build_model(key, config, func)
    if config.fmt == "json":
        _write_text(config, json.dumps(model.to_json_dict(), indent=2) + "\n")
        return 0
    rows = []
    for entry in model.to_json_dict()["coefficients"]:
        exact = entry["exact"]
        exact_text = "" if exact is None else str(
            Fraction(int(exact["num"]), int(exact["den"]))
        )
        rows.append([str(entry["n"]), entry["decimal"], exact_text])
    _write_csv(config, ["n", "decimal", "exact"], rows)
    return 0


def _cmd_eval(config: RunConfig) -> int:
    key = _require_single_expansion(config)
    func = _load_function(config.function)
    model = _build_model(key, config, func)
    if (config.at is None) == (config.grid is None):
        raise UsageError("eval needs exactly one of --at or --grid")
    if config.at is not None:
        _write_text(config, format_decimal(evaluate(model, config.at)) + "\n")
        return 0
    failed = False
    rows = []
    for x in _grid_points(config):
        try:
            value = evaluate(model, x)
        except DomainError:
            value = math.nan
            failed = True
        rows.append([format_decimal(x), format_decimal(value)])
    _write_csv(config, ["x", "approx"], rows)
    return 2 if failed else 0


def _cmd_radius(config: RunConfig) -> int:
    key = _require_single_expansion(config)
    if key == "tp":
        raise UsageError("radius needs a catalog family, not the Taylor baseline")
    func = _load_function(config.function)
    exp = get_expansion(key, alpha=config.alpha, beta=config.beta, w=config.w)
    model = assemble(exp, func, config.terms)
    radius = estimate_radius(model)
    interval = map_domain(exp, radius) if math.isfinite(radius) else map_domain(
        exp, math.inf
    )
    if config.fmt == "json":
        _write_text(config, json.dumps({
            "R": format_decimal(radius),
            "x_lo": format_decimal(interval.lo),
            "x_hi": format_decimal(interval.hi),
        }, indent=2) + "\n")
        return 0
    _write_csv(config, ["R", "x_lo", "x_hi"], [[
        format_decimal(radius), format_decimal(interval.lo),
        format_decimal(interval.hi),
    ]])
    return 0


def _cmd_compare(config: RunConfig) -> int:
    if not config.expansions:
        raise UsageError("compare needs --expansion with one or more family keys")
    if (config.at is None) == (config.grid is None):
        raise UsageError("compare needs exactly one of --at or --grid")
    func = _load_function(config.function)
    xs = [config.at] if config.at is not None else _grid_points(config)
    failed = False
    rows = []
    for key in config.expansions:
        model = _build_model(key, config, func)
        for point in error_report(model, xs):
            if point.note:
                failed = True
            rows.append([
                key,
                format_decimal(point.x),
                format_decimal(point.approx),
                format_decimal(point.exact),
                format_decimal(point.delta),
            ])
    _write_csv(config, ["expansion", "x", "approx", "exact", "delta"], rows)
    return 2 if failed else 0


_COMMANDS = {
    "table": _cmd_table,
    "figures": _cmd_figures,
    "coeffs": _cmd_coeffs,
    "eval": _cmd_eval,
    "radius": _cmd_radius,
    "compare": _cmd_compare,
}


def _add_model_flags(sub, *, function_required=True):
    sub.add_argument("--expansion", required=True,
                     help="family key (a1..a13, c1..c6) or tp; compare "
                          "accepts a comma-separated list")
    sub.add_argument("--alpha", help="alpha parameter (rational, e.g. 1/2)")
    sub.add_argument("--beta", help="beta parameter (rational)")
    sub.add_argument("--w", help="w parameter (rational)")
    sub.add_argument("--function", required=function_required,
                     help="exp | sin | sq | ln1p | pow:RATIONAL | derivative file")
    sub.add_argument("--terms", type=int, default=8,
                     help="matched derivative order N (default 8)")
    sub.add_argument("--out", help="output path (default stdout)")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="funcseries",
        description="Derivative-matching power-series approximations: "
                    "coefficients, evaluation, error tables, figure data.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    table = subs.add_parser("table", help="error table for ln1p at x=0.5")
    table.add_argument("--n-list", default="3,7,10,20",
                       help="comma-separated list of orders (default 3,7,10,20)")
    table.add_argument("--out", help="output path (default stdout)")

    figures = subs.add_parser("figures", help="grid data files for all families")
    figures.add_argument("--out", help="output directory (default ./figures)")
    figures.add_argument("--terms", type=int, default=8,
                         help="matched derivative order N (default 8)")
    figures.add_argument("--grid", default="-3:3:241",
                         help="start:stop:count; write --grid=-3:3:241 when "
                              "start is negative (default -3:3:241)")

    coeffs = subs.add_parser("coeffs", help="coefficient listing for one model")
    _add_model_flags(coeffs)
    coeffs.add_argument("--format", choices=("csv", "json"), default="csv")

    ev = subs.add_parser("eval", help="evaluate one model at a point or grid")
    _add_model_flags(ev)
    ev.add_argument("--at", help="single evaluation point (use --at=-0.5 "
                                 "for negative values)")
    ev.add_argument("--grid", help="start:stop:count (use --grid=-1:1:21 "
                                   "when start is negative)")

    radius = subs.add_parser("radius", help="convergence radius and x-interval")
    _add_model_flags(radius)
    radius.add_argument("--format", choices=("csv", "json"), default="csv")

    compare = subs.add_parser("compare", help="side-by-side family comparison")
    _add_model_flags(compare)
    compare.add_argument("--at", help="single evaluation point (use --at=-0.5 "
                                      "for negative values)")
    compare.add_argument("--grid", help="start:stop:count (use --grid=-1:1:21 "
                                        "when start is negative)")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    expansions = ()
    if getattr(args, "expansion", None):
        expansions = tuple(
            key.strip() for key in args.expansion.split(",") if key.strip()
        )
        for key in expansions:
            if key != "tp" and key not in FAMILY_KEYS:
                raise UsageError(f"unknown family key {key!r}")
    terms = getattr(args, "terms", 8)
    if terms < 1:
        raise UsageError("--terms must be at least 1")
    return RunConfig(
        command=args.command,
        expansions=expansions,
        alpha=_parse_rational(args.alpha) if getattr(args, "alpha", None) else None,
        beta=_parse_rational(args.beta) if getattr(args, "beta", None) else None,
        w=_parse_rational(args.w) if getattr(args, "w", None) else None,
        function=getattr(args, "function", None),
        terms=terms,
        at=_parse_point(args.at) if getattr(args, "at", None) else None,
        grid=_parse_grid(args.grid) if getattr(args, "grid", None) else None,
        out=getattr(args, "out", None),
        fmt=getattr(args, "format", "csv"),
        n_list=_parse_n_list(getattr(args, "n_list", "3,7,10,20")),
    )


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        config = _config_from_args(args)
        return _COMMANDS[config.command](config)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (DomainError, ConvergenceError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

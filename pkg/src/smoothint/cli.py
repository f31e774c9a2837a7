"""Command-line front end.

Subcommands:

* ``table``: tabulate the integral map and save it (JSON or CSV).
* ``recover``: invert an observed integral value against a saved table.
* ``plot-data``: emit two-column CSV traces behind the standard pictures
  (bump train, integral map, partial sums, smooth map).
* ``sweep``: noise-robustness sweep of exact recovery accuracy.
* ``multidim``: emit a separable integral grid as CSV.

Exit codes: 0 success, 2 invalid arguments, 3 file I/O failure, 4 recovery
found nothing.  Arguments are fully validated before any output file is
opened, so a failed invocation never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys

from .bumps import Sigmoid
from .coefficients import Canonical, ExpPoly, Generalized, Trig, partial_sums
from .encoder import EncoderConfig, Mode, counter_grid
from .integral_map import area_scale, build_table, integral_closed
from .multidim import MultiEncoderConfig, integral_multi
from .recovery import (
    RecoveryMethod,
    noise_sweep,
    recover_binary,
    recover_match,
    recover_spline,
    recover_threshold,
)
from .tableio import load_table, save_table_csv, save_table_json

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NOT_FOUND = 4


def _positive_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value) or value <= 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive real, got {text!r}")
    return value


def _finite_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite real, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _float_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def _range_pair(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    lo, hi = (float(part) for part in parts)
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise argparse.ArgumentTypeError(f"expected finite lo < hi, got {text!r}")
    return lo, hi


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family",
        choices=["canonical", "generalized", "exppoly", "trig"],
        default="canonical",
        help="coefficient family (default canonical)",
    )
    parser.add_argument("--alpha", type=_finite_float, default=0.5, help="generalized: geometric base")
    parser.add_argument("--beta", type=_finite_float, default=1.0, help="generalized: alternating weight")
    parser.add_argument("--gamma", type=_finite_float, default=1.0, help="generalized: decay exponent")
    parser.add_argument("--p", type=_finite_float, default=1.0, help="exppoly: decay exponent")


def _family_from_args(args: argparse.Namespace):
    if args.family == "canonical":
        return Canonical()
    if args.family == "generalized":
        return Generalized(alpha=args.alpha, beta=args.beta, gamma=args.gamma)
    if args.family == "exppoly":
        return ExpPoly(p=args.p)
    return Trig()


def _write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def _cmd_table(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    config = EncoderConfig(family=family, delta=args.delta)
    table = build_table(config, args.n_max)
    if args.format == "json":
        save_table_json(table, args.out)
    else:
        save_table_csv(table, args.out)
    print(f"wrote {table.n_max} rows to {args.out}")
    return EXIT_OK


def _cmd_recover(args: argparse.Namespace) -> int:
    table = load_table(args.table)
    if args.method == "threshold":
        result = recover_threshold(table, args.epsilon, require_local_min=args.require_local_min)
    else:
        if args.target is None:
            print(f"error: --target is required for method {args.method!r}", file=sys.stderr)
            return EXIT_USAGE
        if args.method == "match":
            result = recover_match(table, args.target, args.epsilon)
        elif args.method == "binary":
            result = recover_binary(table, args.target, args.epsilon)
        else:
            result = recover_spline(table, args.target, tol=args.epsilon)
    if result is None:
        print("no qualifying row within epsilon", file=sys.stderr)
        return EXIT_NOT_FOUND
    payload = {
        "n": result.n,
        "residual": result.residual,
        "method": result.method.value,
        "stable": result.stable,
    }
    if result.method is RecoveryMethod.SPLINE:
        payload["rounded"] = result.nearest_integer
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_plot_data(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    lines = ["x,y"]
    if args.what in ("counter", "smooth") and args.points < 2:
        print("error: --points must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    if args.what == "counter":
        if args.n is None:
            print("error: --n is required for --what counter", file=sys.stderr)
            return EXIT_USAGE
        config = EncoderConfig(family=family, delta=args.delta, mode=Mode.FRACTIONAL)
        t_lo, t_hi = args.range if args.range else (0.0, args.n + 3.0)
        ts, values = counter_grid(config, args.n, t_lo, t_hi, args.points)
        lines += [f"{t:.17g},{v:.17g}" for t, v in zip(ts, values)]
    elif args.what in ("imap", "partials"):
        if args.n is None:
            print(f"error: --n is required for --what {args.what}", file=sys.stderr)
            return EXIT_USAGE
        count = int(args.n)
        if count < 1 or count != args.n:
            print("error: --n must be a positive integer here", file=sys.stderr)
            return EXIT_USAGE
        sums = partial_sums(family, count)
        if args.what == "imap":
            sums = area_scale(args.delta) * sums
        lines += [f"{n},{v:.17g}" for n, v in enumerate(sums, start=1)]
    else:  # smooth
        t_lo, t_hi = args.range if args.range else (0.0, 10.0)
        if t_lo < 0.0:
            print("error: the smooth map is defined for N >= 0", file=sys.stderr)
            return EXIT_USAGE
        config = EncoderConfig(
            family=family,
            delta=args.delta,
            mode=Mode.SMOOTH,
            transition=Sigmoid(args.sharpness),
            truncation=math.ceil(t_hi) + 10,
        )
        step = (t_hi - t_lo) / (args.points - 1)
        for i in range(args.points):
            n_value = t_lo + step * i if i < args.points - 1 else t_hi
            lines.append(f"{n_value:.17g},{integral_closed(config, n_value):.17g}")
    _write_lines(args.out, lines)
    print(f"wrote {len(lines) - 1} rows to {args.out}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    table = load_table(args.table)
    results = noise_sweep(
        table,
        args.true_n,
        args.epsilon,
        args.amplitudes,
        trials=args.trials,
        seed=args.seed,
    )
    lines = ["amplitude,accuracy"]
    lines += [f"{amplitude:.17g},{accuracy:.17g}" for amplitude, accuracy in results]
    _write_lines(args.out, lines)
    print(f"wrote {len(results)} rows to {args.out}")
    return EXIT_OK


def _cmd_multidim(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    limits = args.n_max
    if any(limit < 1 for limit in limits):
        print("error: every axis limit must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    config = MultiEncoderConfig.isotropic(family, len(limits), delta=args.delta)
    header = ",".join(f"N{i}" for i in range(1, config.dimension + 1)) + ",I"
    lines = [header]
    for combo in itertools.product(*(range(1, limit + 1) for limit in limits)):
        prefix = ",".join(str(component) for component in combo)
        lines.append(f"{prefix},{integral_multi(config, combo):.17g}")
    _write_lines(args.out, lines)
    print(f"wrote {len(lines) - 1} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smoothint",
        description="encode integers as bump-train integral cancellations and recover them",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="tabulate the integral map and save it")
    _add_family_arguments(table)
    table.add_argument("--delta", type=_positive_float, default=0.2, help="bump width (default 0.2)")
    table.add_argument("--n-max", type=_positive_int, required=True, help="number of rows")
    table.add_argument("--format", choices=["json", "csv"], default="json", help="output form")
    table.add_argument("--out", required=True, help="output file path")
    table.set_defaults(handler=_cmd_table)

    recover = commands.add_parser("recover", help="invert an observed integral value")
    recover.add_argument("--table", required=True, help="saved table file (JSON or CSV)")
    recover.add_argument("--target", type=_finite_float, default=None, help="observed integral value")
    recover.add_argument("--epsilon", type=_positive_float, required=True, help="match tolerance")
    recover.add_argument(
        "--method",
        choices=["match", "binary", "spline", "threshold"],
        default="match",
        help="inversion strategy (default match)",
    )
    recover.add_argument(
        "--require-local-min",
        action="store_true",
        help="threshold only: demand a local magnitude minimum",
    )
    recover.set_defaults(handler=_cmd_recover)

    plot_data = commands.add_parser("plot-data", help="emit x,y CSV traces")
    _add_family_arguments(plot_data)
    plot_data.add_argument(
        "--what",
        choices=["counter", "imap", "partials", "smooth"],
        required=True,
        help="which trace to emit",
    )
    plot_data.add_argument("--delta", type=_positive_float, default=0.2, help="bump width (default 0.2)")
    plot_data.add_argument("--n", type=_finite_float, default=None, help="counting parameter or row count")
    plot_data.add_argument("--range", type=_range_pair, default=None, help="sample range lo:hi")
    plot_data.add_argument("--points", type=_positive_int, default=1000, help="sample count (default 1000)")
    plot_data.add_argument("--sharpness", type=_positive_float, default=10.0, help="smooth transition sharpness")
    plot_data.add_argument("--out", required=True, help="output CSV path")
    plot_data.set_defaults(handler=_cmd_plot_data)

    sweep = commands.add_parser("sweep", help="noise-robustness sweep")
    sweep.add_argument("--table", required=True, help="saved table file (JSON or CSV)")
    sweep.add_argument("--true-n", type=_positive_int, required=True, help="row whose value is perturbed")
    sweep.add_argument("--epsilon", type=_positive_float, required=True, help="match tolerance")
    sweep.add_argument("--amplitudes", type=_float_list, required=True, help="comma-separated noise amplitudes")
    sweep.add_argument("--trials", type=_positive_int, default=100, help="draws per amplitude (default 100)")
    sweep.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    sweep.add_argument("--out", required=True, help="output CSV path")
    sweep.set_defaults(handler=_cmd_sweep)

    multidim = commands.add_parser("multidim", help="emit a separable integral grid as CSV")
    _add_family_arguments(multidim)
    multidim.add_argument("--delta", type=_positive_float, default=0.2, help="bump width (default 0.2)")
    multidim.add_argument("--n-max", type=_int_list, required=True, help="per-axis limits, e.g. 30,30")
    multidim.add_argument("--out", required=True, help="output CSV path")
    multidim.set_defaults(handler=_cmd_multidim)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``logconcave <subcommand> ...``.

Exit status: 0 when everything checked passes, 1 on any failed claim or
conjecture counterexample, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import bounds, maxprod, series, verify

ENV_CACHE = "LOGCONCAVE_CACHE"
FORMATS = ("tsv", "csv", "json", "md")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "logconcave"


def _fmt_value(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def emit_table(header: list[str], rows: list[list], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        recs = [dict(zip(header, (_fmt_value(v) for v in row))) for row in rows]
        out.write(json.dumps(recs, indent=2) + "\n")
    elif fmt == "md":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "---|" * len(header) + "\n")
        for row in rows:
            out.write("| " + " | ".join(_fmt_value(v) for v in row) + " |\n")
    else:
        w = csv.writer(out, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt_value(v) for v in row])


def _positive(name):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {value}")
        return value
    return parse


def _nonnegative(name):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if value < 0:
            raise argparse.ArgumentTypeError(f"{name} must be >= 0, got {value}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    def add_common(parser, default):
        parser.add_argument("--cache-dir", type=Path, default=default(None),
                            help=f"row cache directory (env {ENV_CACHE})")
        parser.add_argument("--format", choices=FORMATS, default=default(None),
                            help="output format (default: md on a terminal, csv otherwise)")
        parser.add_argument("--jobs", type=_positive("--jobs"), default=default(1),
                            help="worker processes for per-d work")
        parser.add_argument("-v", "--verbose", action="store_true", default=default(False))

    p = _Parser(prog="logconcave", description="Coefficients of prod (1-q^n)^(-n^(d-1)) and their log-concavity.")
    add_common(p, lambda v: v)
    # flags repeated after the subcommand override the ones before it
    common = _Parser(add_help=False)
    add_common(common, lambda v: argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    s = command("compute", "print p_d(0..N)")
    s.add_argument("--d", type=_positive("--d"), required=True)
    s.add_argument("--n", type=_nonnegative("--n"), required=True)

    s = command("delta", "Delta_d(n) and its class")
    s.add_argument("--d", type=_positive("--d"), required=True)
    s.add_argument("--n", type=_positive("--n"), required=True)

    s = command("landscape", "exception grid over (n, d)")
    s.add_argument("--dmax", type=_positive("--dmax"), default=20)
    s.add_argument("--nmax", type=_positive("--nmax"), default=26)

    s = command("maxprod", "largest partition products of n")
    s.add_argument("--n", type=_positive("--n"), required=True)
    s.add_argument("--top", type=_positive("--top"), default=3)

    s = command("bounds", "sandwich bounds for p_d(n)")
    s.add_argument("--n", type=_positive("--n"), required=True)
    s.add_argument("--d", type=_positive("--d"), required=True)

    s = command("constants", "threshold constants at n")
    s.add_argument("--n", type=_positive("--n"), required=True)

    s = command("figure2", "threshold curves as CSV")
    s.add_argument("--from", dest="n_from", type=_positive("--from"), default=7)
    s.add_argument("--to", dest="n_to", type=_positive("--to"), default=59)
    s.add_argument("--step", type=_positive("--step"), default=1)

    s = command("verify", "reproduce tables and claims")
    s.add_argument("--suite", choices=(*verify.SUITE_NAMES, "all"), default="all")
    s.add_argument("--nmax", type=_positive("--nmax"), default=2000, help="table1 range in n")
    s.add_argument("--dcap", type=_positive("--dcap"), default=200, help="theorem1 range in d")
    s.add_argument("--conj-nmax", type=_positive("--conj-nmax"), default=200)
    s.add_argument("--conj-dmax", type=_positive("--conj-dmax"), default=60)

    s = command("custom-alpha", "coefficients for alpha_1 alpha_2 ... read from a file")
    s.add_argument("--rule-file", type=Path, required=True)
    s.add_argument("--n", type=_nonnegative("--n"), required=True)
    return p


def _check_caps(args) -> None:
    cmd = args.command
    if cmd == "maxprod" and not 2 <= args.n <= maxprod.ENUMERATION_CAP:
        raise UsageError(f"--n must be in [2, {maxprod.ENUMERATION_CAP}], got {args.n}")
    if cmd == "bounds" and (args.n < 2 or (args.n % 3 == 1 and args.n < 4)):
        raise UsageError(f"--n must be >= 2 (>= 4 when n = 1 mod 3), got {args.n}")
    if cmd == "constants" and args.n < 6:
        raise UsageError(f"--n must be >= 6, got {args.n}")
    if cmd == "figure2" and (args.n_from < 6 or args.n_to < args.n_from):
        raise UsageError(f"--from must be >= 6 and <= --to, got {args.n_from}..{args.n_to}")
    if cmd == "verify":
        if args.nmax < 26:
            raise UsageError(f"--nmax must be >= 26, got {args.nmax}")
        if args.dcap < 20:
            raise UsageError(f"--dcap must be >= 20, got {args.dcap}")
        if args.conj_dmax < 21:
            raise UsageError(f"--conj-dmax must be >= 21, got {args.conj_dmax}")


def _read_alpha(path: Path) -> list[int]:
    try:
        tokens = path.read_text().split()
    except OSError as exc:
        raise UsageError(f"--rule-file: {exc.strerror}: {path}") from None
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"--rule-file: non-integer entry in {path}") from None
    for i, v in enumerate(values, 1):
        if v < 0:
            raise UsageError(f"--rule-file: alpha_{i} = {v} is negative")
    return values


def _run(args, fmt: str) -> int:
    cmd = args.command
    if cmd == "compute":
        cache = series.RowCache(args.cache_dir or _default_cache_dir())
        row = cache.get(args.d, args.n)
        emit_table(["n", f"p_{args.d}(n)"], [[n, c] for n, c in enumerate(row.coeffs)], fmt)
        return 0

    if cmd == "delta":
        cache = series.RowCache(args.cache_dir or _default_cache_dir())
        res = series.delta(args.d, args.n, cache.get(args.d, args.n + 1))
        emit_table(["n", "d", "delta", "class"], [[res.n, res.d, res.delta, res.shape.value]], fmt)
        return 0

    if cmd == "landscape":
        grid = verify.landscape(args.dmax, args.nmax, jobs=args.jobs)
        if fmt == "md":
            sys.stdout.write(grid.to_markdown())
        elif fmt == "json":
            data = {str(n): list(grid.exceptions_at(n)) for n in range(1, args.nmax + 1)}
            sys.stdout.write(json.dumps({"d_max": args.dmax, "n_max": args.nmax, "exceptions": data}, indent=2) + "\n")
        else:
            rows = grid.to_rows(verify.BULLET)
            emit_table(rows[0], rows[1:], fmt)
        return 0

    if cmd == "maxprod":
        recs = maxprod.product_spectrum(args.n, args.top)
        rows = [[r.rank, r.value, "; ".join("+".join(map(str, w)) for w in r.witnesses)] for r in recs]
        emit_table(["rank", "product", "witnesses"], rows, fmt)
        return 0

    if cmd == "bounds":
        b = bounds.pd_bounds(args.n, args.d, series.power_row(1, args.n))
        actual = series.power_row(args.d, args.n)[args.n]
        emit_table(["n", "d", "residue", "lower", "p_d(n)", "upper", "improved_upper"],
                   [[b.n, b.d, b.residue, b.lower, actual, b.upper, b.improved_upper]], fmt)
        return 0

    if cmd == "constants":
        tc = bounds.threshold_constants(args.n)
        r = args.n % 3
        names = [f"C{r}", f"C{r}_tilde", f"C{r}_star"]
        vals = tc.values()
        header = ["n", "residue", "ceil_C", "ceil_C_tilde", "ceil_C_star", "C", "C_tilde", "C_star"]
        row = [args.n, r, *(tc.ceilings.get(k) for k in names), *(vals.get(k) for k in names)]
        emit_table(header, [row], fmt)
        return 0

    if cmd == "figure2":
        data = bounds.figure2_data(args.n_from, args.n_to, args.step)
        if fmt in ("json", "md", "tsv"):
            emit_table(list(bounds.FIGURE2_HEADER), [list(r) for r in data], fmt)
        else:
            sys.stdout.write(bounds.figure2_csv(data))
        return 0

    if cmd == "verify":
        names = verify.SUITE_NAMES if args.suite == "all" else (args.suite,)
        cache = series.RowCache()
        caps = {"n_max": args.nmax, "d_cap": args.dcap,
                "conj_n_max": args.conj_nmax, "conj_d_max": args.conj_dmax}
        reports = []
        for name in names:
            t0 = time.perf_counter()
            rep = verify.run_suite(name, jobs=args.jobs, cache=cache, **caps)
            print(f"[{name}] {rep.status.value} in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
            reports.append(rep)
        if fmt == "json":
            sys.stdout.write(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True, default=str) + "\n")
        elif fmt == "md":
            sys.stdout.write("\n".join(r.to_markdown() for r in reports))
        else:
            emit_table(["suite", "status"], [[r.suite, r.status.value] for r in reports], fmt)
        return 0 if all(r.ok for r in reports) else 1

    if cmd == "custom-alpha":
        alpha = _read_alpha(args.rule_file)
        if len(alpha) < args.n:
            raise UsageError(f"--rule-file: need {args.n} exponents for --n {args.n}, file has {len(alpha)}")
        row = series.compute_row(series.ExponentSequence.custom(alpha), args.n)
        emit_table(["n", "p_alpha(n)"], [[n, c] for n, c in enumerate(row.coeffs)], fmt)
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    fmt = args.format or ("md" if sys.stdout.isatty() else "csv")
    if args.command == "verify" and args.format is None and not sys.stdout.isatty():
        fmt = "json"
    try:
        _check_caps(args)
        return _run(args, fmt)
    except UsageError as exc:
        print(f"logconcave: error: {exc}", file=sys.stderr)
        return 2

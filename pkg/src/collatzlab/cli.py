"""Command-line surface.

Subcommands: scan, podd, dist, tree, preds, seq, runseed, verify-roots.

Exit codes: 0 success, 1 usage or validation error, 2 overflow or step cap,
3 verification failure or insufficient fit data.  All file outputs are
byte-stable for identical arguments (fixed float formatting, fixed
ordering), including under any --threads value.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import output
from .cache import StoppingCache
from .core import DEFAULT_STEP_CAP
from .errors import (
    FixedWidthOverflowError,
    InsufficientBinsError,
    SequenceVerificationError,
    StepCapError,
)
from .parity import (
    DEFAULT_BIN_COUNT,
    DEFAULT_FIT_WINDOW,
    histogram,
    max_p_odd,
    p_odd,
    parity_sequence,
    power_law_fit,
    scan_range,
)
from .sequences import (
    n_table_csv,
    q_sequence,
    run_seed,
    validate_multiplier,
    verify_increasing_run,
)
from .tree import (
    build_tree,
    predecessors_formula,
    tree_to_dot,
    tree_to_json,
    verify_roots,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here reserves 2 for
    numeric failures, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write_or_print(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


@dataclass(frozen=True)
class ScanJob:
    """Validated parameters shared by scan and dist."""

    lo: int
    hi: int
    workers: int
    cap: int
    cache_path: str | None

    @classmethod
    def from_args(cls, args) -> "ScanJob":
        if args.start < 1 or args.end < 1:
            raise ValueError("--from and --to must be >= 1")
        if args.start > args.end:
            raise ValueError(f"--from {args.start} exceeds --to {args.end}")
        if args.threads < 1:
            raise ValueError("--threads must be >= 1")
        if args.cap < 1:
            raise ValueError("--cap must be >= 1")
        return cls(args.start, args.end, args.threads, args.cap, args.cache)

    def run(self):
        cache = StoppingCache.load(self.cache_path) if self.cache_path else None
        records = scan_range(
            self.lo, self.hi, workers=self.workers, cache=cache, cap=self.cap
        )
        if cache is not None:
            cache.save(self.cache_path)
        return records


def _add_scan_arguments(sub, range_required: bool = True) -> None:
    sub.add_argument("--from", dest="start", type=int, required=range_required,
                     default=None, help="first start value (>= 1)")
    sub.add_argument("--to", dest="end", type=int, required=range_required,
                     default=None, help="last start value (>= --from)")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker processes; output is identical for any value")
    sub.add_argument("--cache", default=None,
                     help="stopping-time cache file, created or extended")
    sub.add_argument("--cap", type=int, default=DEFAULT_STEP_CAP,
                     help="abort if an orbit exceeds this many steps")


def cmd_scan(args) -> int:
    job = ScanJob.from_args(args)
    records = job.run()
    if args.format == "json":
        text = output.records_to_json(records)
    else:
        text = output.records_to_csv(records)
    if args.out is None:
        sys.stdout.write(text)
        summary_fp = sys.stderr
    else:
        Path(args.out).write_text(text)
        summary_fp = sys.stdout
    if args.plot is not None:
        Path(args.plot).write_text(output.records_xy(records))
    witness, peak = max_p_odd(records, 0)
    mean_sigma = sum(r.sigma for r in records) / len(records)
    print(
        f"scanned {len(records)} starts in [{job.lo}, {job.hi}]  "
        f"max p_odd {output.format_fraction(peak)} at x={witness}  "
        f"mean sigma {mean_sigma:.6f}",
        file=summary_fp,
    )
    return EXIT_OK


def cmd_podd(args) -> int:
    if args.x < 1:
        raise ValueError("x must be >= 1")
    rec = p_odd(args.x, cap=args.cap)
    exact = rec.p_odd_exact
    line = (
        f"x={rec.x} sigma={rec.sigma} odd_steps={rec.odd_steps} "
        f"p_odd={output.format_fraction(rec.p_odd)} ({exact.numerator}/{exact.denominator})"
    )
    if args.bits:
        line += " bits=" + "".join(map(str, parity_sequence(args.x, cap=args.cap)))
    print(line)
    return EXIT_OK


def cmd_dist(args) -> int:
    if args.bins < 10:
        raise ValueError("--bins must be >= 10")
    if not 0.0 <= args.fit_lo < args.fit_hi <= 0.5:
        raise ValueError("fit window must satisfy 0 <= lo < hi <= 0.5")
    if args.input is not None:
        records = output.read_records_csv(args.input)
        if not records:
            raise ValueError(f"{args.input}: no records")
    else:
        if args.start is None or args.end is None:
            raise ValueError("either --input or both --from and --to are required")
        records = ScanJob.from_args(args).run()
    hist = histogram(records, bin_count=args.bins)
    fit = power_law_fit(hist, window=(args.fit_lo, args.fit_hi))
    if args.out_hist is not None:
        Path(args.out_hist).write_text(output.histogram_to_csv(hist))
    if args.out_fit is not None:
        Path(args.out_fit).write_text(output.fit_to_json(fit))
    if args.plot is not None:
        Path(args.plot).write_text(output.histogram_xy(hist))
    if args.plot_loglog is not None:
        Path(args.plot_loglog).write_text(output.histogram_xy_loglog(hist))
    print(
        f"alpha={fit.alpha:.6f} r_squared={fit.r_squared:.6f} "
        f"bins_used={fit.bins_used} samples={fit.sample_count}"
    )
    return EXIT_OK


def cmd_preds(args) -> int:
    if args.y < 1 or not args.y & 1:
        raise ValueError("y must be an odd integer >= 1")
    if args.count < 1:
        raise ValueError("--count must be >= 1")
    preds = predecessors_formula(args.y, args.count)
    if not preds:
        print(f"preds: {args.y} is a multiple of 3: branch root, no predecessors",
              file=sys.stderr)
        return EXIT_OK
    print(" ".join(str(p) for p in preds))
    return EXIT_OK


def cmd_tree(args) -> int:
    if args.root < 1 or not args.root & 1:
        raise ValueError("--root must be an odd integer >= 1")
    if args.max_value < 1:
        raise ValueError("--max-value must be >= 1")
    if args.max_depth < 0:
        raise ValueError("--max-depth must be >= 0")
    node = build_tree(args.root, args.max_value, args.max_depth)
    text = tree_to_dot(node) if args.format == "dot" else tree_to_json(node)
    _write_or_print(text, args.out)
    return EXIT_OK


def cmd_seq(args) -> int:
    if args.q < 0:
        raise ValueError("--q must be >= 0")
    if args.table:
        _write_or_print(n_table_csv(args.q), args.out)
        return EXIT_OK
    decision = validate_multiplier(args.multiplier, strict=not args.permissive)
    if not decision.accepted:
        raise ValueError(f"multiplier rejected: {decision.reason} "
                         "(use --permissive to allow any positive integer)")
    try:
        seq = q_sequence(args.q, args.multiplier)
    except SequenceVerificationError as exc:
        print(f"seq: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.format == "json":
        _write_or_print(output.sequence_to_json(seq), args.out)
    else:
        flag = "verified" if seq.verified else "UNVERIFIED"
        _write_or_print(" ".join(str(v) for v in seq.values) + f"  {flag}\n", args.out)
    return EXIT_OK


def cmd_runseed(args) -> int:
    seed = run_seed(args.s, args.n)
    report = verify_increasing_run(seed.x0, seed.s)
    print(f"seed {seed.x0}")
    print("run " + " ".join(str(v) for v in report.values))
    if report.passed:
        print(f"pass  increasing run of at least {report.max_run} steps")
        return EXIT_OK
    print(f"FAIL  increasing run stopped after {report.max_run} steps "
          f"(expected >= {report.requested})")
    return EXIT_VERIFY


def cmd_verify_roots(args) -> int:
    report = verify_roots(args.max)
    print(f"{len(report.counterexamples)} counterexamples / "
          f"{report.checked} odd values checked")
    if report.passed:
        return EXIT_OK
    for x in report.counterexamples[:20]:
        print(f"counterexample: odd_step({x}) is a multiple of 3", file=sys.stderr)
    return EXIT_VERIFY


def build_parser() -> _Parser:
    parser = _Parser(prog="collatzlab",
                     description="Collatz orbit statistics, predecessor trees, "
                                 "and increasing-run generators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("scan",
                       help="stopping times and odd fractions over a range")
    _add_scan_arguments(p)
    p.add_argument("--out", default=None, help="records file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--plot", default=None, help="write (x, p_odd) plot data here")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("podd",
                       help="stopping time and odd fraction of one start")
    p.add_argument("x", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_STEP_CAP)
    p.add_argument("--bits", action="store_true", help="also print the parity bits")
    p.set_defaults(func=cmd_podd)

    p = sub.add_parser("dist",
                       help="odd-fraction distribution and log-log slope")
    # range flags optional here: dist can re-fit a previously scanned CSV
    _add_scan_arguments(p, range_required=False)
    p.add_argument("--input", default=None,
                   help="records CSV to fit instead of scanning")
    p.add_argument("--bins", type=int, default=DEFAULT_BIN_COUNT)
    p.add_argument("--fit-lo", type=float, default=DEFAULT_FIT_WINDOW[0])
    p.add_argument("--fit-hi", type=float, default=DEFAULT_FIT_WINDOW[1])
    p.add_argument("--out-hist", default=None, help="histogram CSV path")
    p.add_argument("--out-fit", default=None, help="fit JSON path")
    p.add_argument("--plot", default=None, help="(bin center, probability) data")
    p.add_argument("--plot-loglog", default=None,
                   help="(log10 center, log10 probability) data, nonzero bins")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("preds",
                       help="closed-form predecessors of an odd value")
    p.add_argument("y", type=int)
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_preds)

    p = sub.add_parser("tree",
                       help="bounded predecessor tree as JSON or DOT")
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--max-value", type=int, default=1000)
    p.add_argument("--max-depth", type=int, default=8)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("seq",
                       help="verified increasing sequence for a level q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--multiplier", type=int, default=1)
    p.add_argument("--permissive", action="store_true",
                   help="accept any positive multiplier")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--table", action="store_true",
                   help="emit the n-parameter table up to --q as CSV instead")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("runseed",
                       help="seed an increasing run and verify it")
    p.add_argument("--s", type=int, required=True, help="requested run length")
    p.add_argument("--n", type=int, required=True, help="seed parameter")
    p.set_defaults(func=cmd_runseed)

    p = sub.add_parser("verify-roots",
                       help="check no odd-step image is a multiple of 3")
    p.add_argument("--max", type=int, default=1_000_000)
    p.set_defaults(func=cmd_verify_roots)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InsufficientBinsError, SequenceVerificationError) as exc:
        # before ValueError: InsufficientBinsError subclasses it
        print(f"collatzlab: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FixedWidthOverflowError, StepCapError) as exc:
        print(f"collatzlab: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"collatzlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"collatzlab: file error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

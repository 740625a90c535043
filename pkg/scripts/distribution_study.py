#!/usr/bin/env python3
"""Reproduce the odd-fraction study end to end.

Scans a range, writes plot-ready data files, fits the log-log slope of the
distribution, and prints the peak odd fraction above a few thresholds.

    python scripts/distribution_study.py --limit 100000 --outdir data/
"""

import argparse
import sys
import time
from pathlib import Path

from collatzlab import StoppingCache, histogram, max_p_odd, power_law_fit, scan_range
from collatzlab.output import (
    fit_to_json,
    format_fraction,
    histogram_to_csv,
    histogram_xy,
    histogram_xy_loglog,
    records_to_csv,
    records_xy,
)
from collatzlab.parity import DEFAULT_BIN_COUNT, DEFAULT_FIT_WINDOW


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=100_000)
    ap.add_argument("--bins", type=int, default=DEFAULT_BIN_COUNT)
    ap.add_argument("--fit-lo", type=float, default=DEFAULT_FIT_WINDOW[0])
    ap.add_argument("--fit-hi", type=float, default=DEFAULT_FIT_WINDOW[1])
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--cache", default=None)
    ap.add_argument("--outdir", default="data")
    args = ap.parse_args(argv)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    cache = StoppingCache.load(args.cache) if args.cache else None
    t0 = time.time()
    records = scan_range(1, args.limit, workers=args.threads, cache=cache)
    dt = time.time() - t0
    if cache is not None:
        cache.save(args.cache)
    print(f"scanned 1..{args.limit} in {dt:.2f}s")

    (outdir / "records.csv").write_text(records_to_csv(records))
    (outdir / "p_odd_vs_x.dat").write_text(records_xy(records))

    hist = histogram(records, bin_count=args.bins)
    (outdir / "histogram.csv").write_text(histogram_to_csv(hist))
    (outdir / "distribution.dat").write_text(histogram_xy(hist))
    (outdir / "distribution_loglog.dat").write_text(histogram_xy_loglog(hist))

    fit = power_law_fit(hist, window=(args.fit_lo, args.fit_hi))
    (outdir / "fit.json").write_text(fit_to_json(fit))
    print(f"log-log slope over [{args.fit_lo}, {args.fit_hi}]: "
          f"alpha={fit.alpha:.4f} r_squared={fit.r_squared:.4f} "
          f"({fit.bins_used} bins)")

    for threshold in (0, 84, 100, 1_000, 10_000):
        if threshold >= args.limit:
            break
        x, peak = max_p_odd(records, threshold)
        print(f"max p_odd for x > {threshold:>6}: {format_fraction(peak)} at x={x}")
    print(f"wrote {outdir}/records.csv, histogram.csv, fit.json and plot data")
    return 0


if __name__ == "__main__":
    sys.exit(main())

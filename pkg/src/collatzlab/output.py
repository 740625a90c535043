"""Deterministic text emission shared by the CLI and the scripts.

Every writer here produces byte-stable output for identical inputs: floats
use a fixed-significance decimal form (never scientific notation), rows
follow input order, and JSON keys are emitted in a fixed order.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .parity import Histogram, PowerLawFit, TrajectoryRecord
from .sequences import QSequence

RECORDS_HEADER = "x,sigma,odd_steps,p_odd"
HISTOGRAM_HEADER = "bin_lo,bin_hi,probability"


def format_fraction(value: float, significant: int = 10) -> str:
    """Fixed-point decimal with exactly `significant` significant digits.

    Intended for values in [0, 1); zero renders with `significant` zeros
    after the point so columns stay aligned and diffable.
    """
    if value == 0.0:
        return "0." + "0" * significant
    exponent = math.floor(math.log10(abs(value)))
    decimals = significant - 1 - exponent
    return f"{value:.{decimals}f}"


def records_to_csv(records) -> str:
    lines = [RECORDS_HEADER]
    lines.extend(
        f"{r.x},{r.sigma},{r.odd_steps},{format_fraction(r.p_odd)}" for r in records
    )
    return "\n".join(lines) + "\n"


def records_to_json(records) -> str:
    rows = [
        {"x": r.x, "sigma": r.sigma, "odd_steps": r.odd_steps, "p_odd": r.p_odd}
        for r in records
    ]
    return json.dumps(rows, indent=2) + "\n"


def read_records_csv(path: str | Path) -> list[TrajectoryRecord]:
    """Parse a records CSV; p_odd is reconstructed from the integer columns."""
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines or lines[0] != RECORDS_HEADER:
        raise ValueError(f"{path}: expected header '{RECORDS_HEADER}'")
    records = []
    for ln in lines[1:]:
        if not ln:
            continue
        x, sigma, odd, _ = ln.split(",")
        records.append(TrajectoryRecord(int(x), int(sigma), int(odd)))
    return records


def histogram_to_csv(hist: Histogram) -> str:
    lines = [HISTOGRAM_HEADER]
    edges = hist.bin_edges
    for i, p in enumerate(hist.probabilities):
        lines.append(
            f"{format_fraction(edges[i])},{format_fraction(edges[i + 1])},{format_fraction(p)}"
        )
    return "\n".join(lines) + "\n"


def fit_to_json(fit: PowerLawFit) -> str:
    payload = {
        "alpha": fit.alpha,
        "intercept": fit.intercept,
        "r_squared": fit.r_squared,
        "window_lo": fit.window[0],
        "window_hi": fit.window[1],
        "bins_used": fit.bins_used,
        "sample_count": fit.sample_count,
    }
    return json.dumps(payload, indent=2) + "\n"


def xy_lines(pairs) -> str:
    """Two-column whitespace-separated plot data.

    Integer abscissas print as integers; everything else uses the fixed
    decimal form.
    """
    out = []
    for a, b in pairs:
        left = str(a) if isinstance(a, int) else format_fraction(a)
        out.append(f"{left} {format_fraction(b)}")
    return "\n".join(out) + "\n"


def records_xy(records) -> str:
    """(x, p_odd) pairs for plotting the odd fraction against the start."""
    return xy_lines((r.x, r.p_odd) for r in records)


def histogram_xy(hist: Histogram) -> str:
    """(bin center, probability) pairs, all bins."""
    return xy_lines(zip(hist.centers, hist.probabilities))


def histogram_xy_loglog(hist: Histogram) -> str:
    """(log10 center, log10 probability) pairs, nonzero bins only."""
    out = []
    for c, p in zip(hist.centers, hist.probabilities):
        if p > 0.0:
            out.append(f"{math.log10(c):.10g} {math.log10(p):.10g}")
    return "\n".join(out) + "\n"


def sequence_to_json(seq: QSequence) -> str:
    """Values as decimal strings: they outgrow any fixed float width fast."""
    payload = {
        "q": seq.q,
        "multiplier": seq.multiplier,
        "n_terms": list(seq.n_terms),
        "values": [str(v) for v in seq.values],
        "verified": seq.verified,
    }
    return json.dumps(payload, indent=2) + "\n"

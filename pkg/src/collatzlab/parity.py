"""Parity statistics along orbits: odd fractions, range scans, distribution.

The central quantity is the odd fraction of an orbit, odd_steps/sigma, with
the window running from the start value through the last value before the
terminal 1.  Under this window the fraction lies in [0, 1/2) for every
start: powers of two give 0, and every terminating orbit passes through
4, 2 just before 1, which keeps odd values strictly in the minority.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cache import StoppingCache
from .core import DEFAULT_STEP_CAP, _TRIPLE_GUARD, collatz_step
from .errors import FixedWidthOverflowError, InsufficientBinsError, StepCapError

DEFAULT_BIN_COUNT = 250
DEFAULT_FIT_WINDOW = (0.25, 0.365)

# Orbit values above this bound are walked but not memoized, which keeps the
# scan memo dense around the range actually being scanned.
_MEMO_SLACK = 4


@dataclass(frozen=True, slots=True)
class TrajectoryRecord:
    """Per-start summary: total stopping time and odd-step count."""

    x: int
    sigma: int
    odd_steps: int

    @property
    def p_odd(self) -> float:
        return self.odd_steps / self.sigma

    @property
    def p_odd_exact(self) -> Fraction:
        return Fraction(self.odd_steps, self.sigma)


def parity_sequence(x: int, cap: int = DEFAULT_STEP_CAP) -> list[int]:
    """0/1 parities of the orbit values from x through the last before 1."""
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"x must be an integer >= 1, got {x!r}")
    bits = []
    v = x
    while len(bits) < cap:
        bits.append(v & 1)
        v = collatz_step(v)
        if v == 1:
            return bits
    raise StepCapError(x, cap)


def p_odd(x: int, cap: int = DEFAULT_STEP_CAP) -> TrajectoryRecord:
    """Record (x, sigma, odd_steps) for a single start value."""
    sigma, odd = _stopping_pair(x, {}, cap, 0)
    return TrajectoryRecord(x, sigma, odd)


def _stopping_pair(
    x: int, memo: dict[int, tuple[int, int]], cap: int, memo_limit: int
) -> tuple[int, int]:
    """(sigma, odd_steps) for x with memoized unwinding along the orbit.

    Checked 64-bit arithmetic; both the cap and the overflow test depend
    only on x, never on the memo state, so results are identical for any
    cache seed or worker split.
    """
    hit = memo.get(x)
    if hit is not None:
        return hit
    path = []
    v = x
    steps = 0
    while True:
        path.append(v)
        if v & 1:
            if v > _TRIPLE_GUARD:
                raise FixedWidthOverflowError(v, f"scanning x={x}")
            v = 3 * v + 1
        else:
            v >>= 1
        steps += 1
        if v == 1:
            sigma, odd = 0, 0
            break
        hit = memo.get(v)
        if hit is not None:
            sigma, odd = hit
            break
        if steps > cap:
            raise StepCapError(x, cap)
    for u in reversed(path):
        sigma += 1
        odd += u & 1
        if u <= memo_limit:
            memo[u] = (sigma, odd)
    if sigma > cap:
        raise StepCapError(x, cap)
    return sigma, odd


def _scan_into(
    out: list[TrajectoryRecord],
    lo: int,
    hi: int,
    memo: dict[int, tuple[int, int]],
    cap: int,
) -> None:
    memo_limit = _MEMO_SLACK * hi
    for x in range(lo, hi + 1):
        sigma, odd = _stopping_pair(x, memo, cap, memo_limit)
        out.append(TrajectoryRecord(x, sigma, odd))


# Worker-process state for parallel scans; populated once per worker by the
# pool initializer and reused across chunks (results are pure in x, so the
# shared memo only affects speed).
_worker_memo: dict[int, tuple[int, int]] = {}
_worker_cap: int = DEFAULT_STEP_CAP


def _worker_init(seed: dict[int, tuple[int, int]], cap: int) -> None:
    global _worker_memo, _worker_cap
    _worker_memo = dict(seed)
    _worker_cap = cap


def _worker_scan(bounds: tuple[int, int]) -> list[tuple[int, int, int]]:
    lo, hi = bounds
    out: list[TrajectoryRecord] = []
    _scan_into(out, lo, hi, _worker_memo, _worker_cap)
    return [(r.x, r.sigma, r.odd_steps) for r in out]


def scan_range(
    lo: int,
    hi: int,
    workers: int = 1,
    cache: StoppingCache | None = None,
    cap: int = DEFAULT_STEP_CAP,
) -> list[TrajectoryRecord]:
    """One record per x in [lo, hi], ascending, independent of worker count.

    Any orbit that overflows the checked range or exceeds the cap aborts
    the scan with the offending x identified.  When a cache is supplied it
    seeds the memo and afterwards absorbs the scanned prefix.
    """
    for name, v in (("lo", lo), ("hi", hi)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be an integer >= 1, got {v!r}")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if not isinstance(workers, int) or workers < 1:
        raise ValueError(f"workers must be an integer >= 1, got {workers!r}")

    seed = cache.seed_memo() if cache is not None else {}
    records: list[TrajectoryRecord] = []
    span = hi - lo + 1
    if workers == 1 or span < 2 * workers:
        _scan_into(records, lo, hi, seed, cap)
    else:
        chunk = max(2048, -(-span // (workers * 4)))
        bounds = [(a, min(a + chunk - 1, hi)) for a in range(lo, hi + 1, chunk)]
        with multiprocessing.Pool(
            workers, initializer=_worker_init, initargs=(seed, cap)
        ) as pool:
            for part in pool.map(_worker_scan, bounds):
                records.extend(TrajectoryRecord(*t) for t in part)
    if cache is not None:
        cache.absorb(records)
    return records


def max_p_odd(records, x_threshold: int) -> tuple[int, float]:
    """Maximum odd fraction among records with x > x_threshold.

    Comparison is exact on the underlying rationals; among equal maxima the
    smallest witness x wins.
    """
    best: TrajectoryRecord | None = None
    for rec in records:
        if rec.x <= x_threshold:
            continue
        if best is None or rec.odd_steps * best.sigma > best.odd_steps * rec.sigma:
            best = rec
    if best is None:
        raise ValueError(f"no records with x > {x_threshold}")
    return best.x, best.p_odd


@dataclass(frozen=True, slots=True)
class Histogram:
    """Normalized distribution of odd fractions over [0, 0.5]."""

    bin_edges: tuple[float, ...]
    probabilities: tuple[float, ...]
    sample_count: int

    @property
    def bin_count(self) -> int:
        return len(self.probabilities)

    @property
    def centers(self) -> tuple[float, ...]:
        e = self.bin_edges
        return tuple((e[i] + e[i + 1]) / 2.0 for i in range(len(e) - 1))


def histogram(records, bin_count: int = DEFAULT_BIN_COUNT) -> Histogram:
    """Equal-width probability histogram of p_odd values over [0, 0.5]."""
    if not records:
        raise ValueError("histogram requires at least one record")
    if not isinstance(bin_count, int) or bin_count < 10:
        raise ValueError(f"bin_count must be an integer >= 10, got {bin_count!r}")
    values = np.fromiter((r.odd_steps / r.sigma for r in records), float, len(records))
    counts, edges = np.histogram(values, bins=bin_count, range=(0.0, 0.5))
    placed = int(counts.sum())
    if placed != len(records):
        raise ValueError(
            f"{len(records) - placed} odd fractions fell outside [0, 0.5]"
        )
    probs = counts / float(len(records))
    return Histogram(tuple(map(float, edges)), tuple(map(float, probs)), len(records))


@dataclass(frozen=True, slots=True)
class PowerLawFit:
    """Least-squares line on (log10 bin center, log10 probability)."""

    alpha: float
    intercept: float
    r_squared: float
    window: tuple[float, float]
    bins_used: int
    sample_count: int


def power_law_fit(
    hist: Histogram, window: tuple[float, float] = DEFAULT_FIT_WINDOW
) -> PowerLawFit:
    """Fit probability ~ center^alpha over nonzero bins inside the window."""
    lo, hi = window
    if not 0.0 <= lo < hi <= 0.5:
        raise ValueError(f"fit window must satisfy 0 <= lo < hi <= 0.5, got {window}")
    centers = np.asarray(hist.centers)
    probs = np.asarray(hist.probabilities)
    mask = (centers >= lo) & (centers <= hi) & (probs > 0.0)
    used = int(mask.sum())
    if used < 3:
        raise InsufficientBinsError(
            f"only {used} nonzero bins inside window [{lo}, {hi}]; need >= 3"
        )
    log_c = np.log10(centers[mask])
    log_p = np.log10(probs[mask])
    slope, intercept = np.polyfit(log_c, log_p, 1)
    residuals = log_p - (slope * log_c + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((log_p - log_p.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return PowerLawFit(
        alpha=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        window=(float(lo), float(hi)),
        bins_used=used,
        sample_count=hist.sample_count,
    )

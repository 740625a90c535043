"""Shared fixtures and the independent brute-force oracles.

The oracles iterate the defining rule directly, never calling the code
paths they are used to check.
"""

from __future__ import annotations

import time

import pytest

from collatzlab import scan_range


def naive_orbit(x: int) -> list[int]:
    """Values from x through the first 1 produced, by the defining rule."""
    out = [x]
    v = x
    while True:
        v = 3 * v + 1 if v % 2 else v // 2
        out.append(v)
        if v == 1:
            return out


def naive_sigma_odd(x: int) -> tuple[int, int]:
    """(total stopping time, odd count over the pre-terminal window)."""
    orbit = naive_orbit(x)
    window = orbit[:-1]
    return len(window), sum(1 for v in window if v % 2)


def naive_next_odd(x: int) -> int:
    """First odd value after x under repeated application of the rule."""
    v = 3 * x + 1
    while v % 2 == 0:
        v //= 2
    return v


@pytest.fixture(scope="session")
def scan_100k():
    """Records for 1..100000 plus the single-threaded wall time."""
    t0 = time.perf_counter()
    records = scan_range(1, 100_000)
    elapsed = time.perf_counter() - t0
    return records, elapsed

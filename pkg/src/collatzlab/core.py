"""The standard and odd-only Collatz maps, trajectories and stopping times.

Naturals are plain Python integers throughout.  Two arithmetic regimes are
offered: the default is unbounded (generators need values that grow without
limit), while ``checked=True`` enforces a 64-bit ceiling with an explicit
error on overflow.  Range scanners use the checked regime so that a value
escaping the fast fixed-width range is a detected failure, never a silent
slowdown or wraparound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FixedWidthOverflowError

FAST_BITS = 64
FAST_MAX = (1 << FAST_BITS) - 1

# Largest x for which 3x+1 still fits in the checked range.
_TRIPLE_GUARD = (FAST_MAX - 1) // 3

# Orders of magnitude above any total stopping time reachable in a desk-scale
# scan, so a capped orbit is a red flag rather than noise.
DEFAULT_STEP_CAP = 1_000_000


def _require_natural(x: int, name: str = "x") -> None:
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"{name} must be an integer >= 1, got {x!r}")


def collatz_step(x: int, checked: bool = False) -> int:
    """One application of the standard map: 3x+1 for odd x, x/2 for even x."""
    _require_natural(x)
    if x & 1:
        if checked and x > _TRIPLE_GUARD:
            raise FixedWidthOverflowError(x, "tripling an odd value")
        return 3 * x + 1
    return x >> 1


def two_adic_valuation(x: int) -> int:
    """Multiplicity of the factor 2 in x (largest m with 2^m dividing x)."""
    _require_natural(x)
    return (x & -x).bit_length() - 1


def odd_step(x: int, checked: bool = False) -> int:
    """Map an odd x to the next odd value: (3x+1) with all factors 2 removed."""
    _require_natural(x)
    if not x & 1:
        raise ValueError(f"odd_step requires an odd argument, got {x}")
    if checked and x > _TRIPLE_GUARD:
        raise FixedWidthOverflowError(x, "tripling an odd value")
    t = 3 * x + 1
    return t // (t & -t)


def next_odd_distance(x: int) -> int:
    """Number of standard-map steps from odd x to the next odd value.

    Equals two_adic_valuation(3x+1) + 1: one tripling step plus one step per
    halving.
    """
    _require_natural(x)
    if not x & 1:
        raise ValueError(f"next_odd_distance requires an odd argument, got {x}")
    return two_adic_valuation(3 * x + 1) + 1


@dataclass(frozen=True, slots=True)
class Trajectory:
    """Materialized orbit under the standard map.

    ``values[0]`` is the start; when ``terminated`` the final entry is the
    first 1 produced by iteration (the start itself never counts, so the
    orbit of 1 is 1, 4, 2, 1).
    """

    start: int
    values: tuple[int, ...]
    terminated: bool

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, slots=True)
class StoppingResult:
    """Total stopping time plus the count of odd values seen on the way.

    ``sigma`` is the least k with C^k(start) = 1; ``odd_steps`` counts odd
    values among the first sigma orbit entries (start included, terminal 1
    excluded).  A capped result means 1 was not produced within the step
    cap and sigma holds the number of steps actually taken.
    """

    sigma: int
    odd_steps: int
    capped: bool


def trajectory(x: int, cap: int = DEFAULT_STEP_CAP, checked: bool = False) -> Trajectory:
    """Iterate the standard map from x until 1 is produced or cap steps elapse."""
    _require_natural(x)
    _require_natural(cap, "cap")
    values = [x]
    v = x
    for _ in range(cap):
        v = collatz_step(v, checked=checked)
        values.append(v)
        if v == 1:
            return Trajectory(x, tuple(values), True)
    return Trajectory(x, tuple(values), False)


def total_stopping_time(
    x: int, cap: int = DEFAULT_STEP_CAP, checked: bool = False
) -> StoppingResult:
    """Steps needed for x to first produce 1, with the odd-value count."""
    _require_natural(x)
    _require_natural(cap, "cap")
    sigma = 0
    odd = 0
    v = x
    while sigma < cap:
        odd += v & 1
        v = collatz_step(v, checked=checked)
        sigma += 1
        if v == 1:
            return StoppingResult(sigma, odd, False)
    return StoppingResult(sigma, odd, True)

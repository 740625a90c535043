"""Closed-form generators for strictly increasing runs of odd values.

Two constructions, both verified step by step against the odd-only map at
generation time rather than trusted:

* run seeds: x0 = 2^(s+2) n - (2^(s+1) + 1) ascends for at least s steps;
* level sequences: for a level q, the parameters n_i = 3^i 2^(q-i) chain
  4n-1 values through q+2 strictly increasing terms, optionally scaled by
  a multiplier.

All arithmetic is unbounded; values grow like 3^q and must never wrap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import odd_step
from .errors import SequenceVerificationError


def n_terms(q: int) -> list[int]:
    """The q+1 chain parameters 3^i * 2^(q-i), i = 0..q."""
    if not isinstance(q, int) or q < 0:
        raise ValueError(f"q must be an integer >= 0, got {q!r}")
    return [3**i * 2 ** (q - i) for i in range(q + 1)]


@dataclass(frozen=True, slots=True)
class QSequence:
    """A verified increasing run of q+2 odd values.

    ``n_terms`` holds the base chain parameters; the multiplier enters only
    through the value formula.
    """

    q: int
    multiplier: int
    n_terms: tuple[int, ...]
    values: tuple[int, ...]
    verified: bool


def q_sequence(q: int, multiplier: int = 1) -> QSequence:
    """Generate and verify the level-q increasing run.

    Terms are 4*multiplier*n_i - 1 for i = 0..q followed by
    6*multiplier*n_q - 1; each step is checked against odd_step and
    against strict growth, so a returned sequence is verified by
    construction.
    """
    if not isinstance(multiplier, int) or multiplier < 1:
        raise ValueError(f"multiplier must be an integer >= 1, got {multiplier!r}")
    terms = n_terms(q)
    values = [4 * multiplier * n - 1 for n in terms]
    values.append(6 * multiplier * terms[-1] - 1)
    for i in range(len(values) - 1):
        image = odd_step(values[i])
        if image != values[i + 1]:
            raise SequenceVerificationError(
                f"q={q} multiplier={multiplier}: odd_step({values[i]}) = {image}, "
                f"expected {values[i + 1]}"
            )
        if values[i + 1] <= values[i]:
            raise SequenceVerificationError(
                f"q={q} multiplier={multiplier}: not increasing at index {i}"
            )
    return QSequence(q, multiplier, tuple(terms), tuple(values), True)


@dataclass(frozen=True, slots=True)
class RunSeed:
    """Start of an increasing run of length at least s."""

    s: int
    n: int
    x0: int


def run_seed(s: int, n: int) -> RunSeed:
    """Seed 2^(s+2) n - (2^(s+1) + 1); odd, = 3 mod 4, ascends >= s steps."""
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"s must be an integer >= 1, got {s!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    return RunSeed(s, n, (1 << (s + 2)) * n - (1 << (s + 1)) - 1)


@dataclass(frozen=True, slots=True)
class RunReport:
    """Observed behavior of the first s odd-only steps from x0."""

    x0: int
    requested: int
    values: tuple[int, ...]
    max_run: int

    @property
    def passed(self) -> bool:
        return self.max_run >= self.requested


def verify_increasing_run(x0: int, s: int) -> RunReport:
    """Apply s odd-only steps from x0 and report the realized increasing run.

    max_run is the number of consecutive strictly increasing steps from x0
    (possibly beyond s); the check passes when max_run >= s.
    """
    if not isinstance(x0, int) or x0 < 1 or not x0 & 1:
        raise ValueError(f"x0 must be an odd integer >= 1, got {x0!r}")
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"s must be an integer >= 1, got {s!r}")
    values = [x0]
    for _ in range(s):
        values.append(odd_step(values[-1]))
    max_run = 0
    v = x0
    while True:
        w = odd_step(v)
        if w <= v:
            break
        max_run += 1
        v = w
    return RunReport(x0, s, tuple(values), max_run)


@dataclass(frozen=True, slots=True)
class MultiplierDecision:
    multiplier: int
    accepted: bool
    reason: str


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def validate_multiplier(m: int, strict: bool = True) -> MultiplierDecision:
    """Accept a sequence multiplier.

    Strict mode admits exactly 1 and the primes >= 5 (the canonical,
    non-redundant family); permissive mode admits any positive integer,
    since the chain arithmetic works for all of them and generation
    verifies every step anyway.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"multiplier must be an integer >= 1, got {m!r}")
    if not strict:
        return MultiplierDecision(m, True, "permissive mode accepts any positive integer")
    if m == 1:
        return MultiplierDecision(m, True, "unit multiplier")
    if m == 2:
        return MultiplierDecision(m, False, "2 is excluded")
    if m == 3:
        return MultiplierDecision(m, False, "3 is excluded")
    if _is_prime(m):
        return MultiplierDecision(m, True, f"{m} is a prime >= 5")
    return MultiplierDecision(m, False, f"{m} is composite")


def canonical_multipliers(count: int) -> list[int]:
    """First `count` strict-mode multipliers: 1, 5, 7, 11, 13, ..."""
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be an integer >= 1, got {count!r}")
    out = []
    m = 1
    while len(out) < count:
        if validate_multiplier(m, strict=True).accepted:
            out.append(m)
        m += 1
    return out


def n_table_csv(q_max: int) -> str:
    """CSV of the chain parameters by level: row i, column q holds 3^i 2^(q-i)."""
    if not isinstance(q_max, int) or q_max < 0:
        raise ValueError(f"q_max must be an integer >= 0, got {q_max!r}")
    lines = ["i," + ",".join(f"q{q}" for q in range(q_max + 1))]
    for i in range(q_max + 1):
        cells = [str(3**i * 2 ** (q - i)) if i <= q else "" for q in range(q_max + 1)]
        lines.append(f"{i}," + ",".join(cells))
    return "\n".join(lines) + "\n"

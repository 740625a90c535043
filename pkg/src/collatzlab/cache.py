"""Flat binary persistence of stopping results for a contiguous 1..n prefix.

Range scans revisit small values constantly; keeping (sigma, odd_steps) for
every x up to the largest scanned bound lets a repeat scan skip the orbit
walk entirely.  The file holds a small header followed by two u32 arrays
indexed by x-1, so it stays dense, byte-stable and cheap to load.
"""

from __future__ import annotations

import struct
import sys
from array import array
from pathlib import Path

_MAGIC = b"CLSC"
_VERSION = 1
_HEADER = struct.Struct("<4sHHQ")
_U32_MAX = 0xFFFFFFFF


class StoppingCache:
    """In-memory mirror of the cache file: pairs for x = 1..count."""

    def __init__(self) -> None:
        self._sigma = array("I")
        self._odd = array("I")

    @property
    def count(self) -> int:
        return len(self._sigma)

    def pair(self, x: int) -> tuple[int, int]:
        if not 1 <= x <= self.count:
            raise KeyError(x)
        return self._sigma[x - 1], self._odd[x - 1]

    def seed_memo(self) -> dict[int, tuple[int, int]]:
        """Materialize the prefix as a memo dict keyed by x."""
        sig, odd = self._sigma, self._odd
        return {x + 1: (sig[x], odd[x]) for x in range(len(sig))}

    def absorb(self, records) -> int:
        """Extend the contiguous prefix from ascending-x scan records.

        Records covering [lo, hi] extend the cache to hi when lo <= count+1;
        a disjoint range (lo > count+1) would leave a hole and is ignored.
        Returns the number of entries appended.
        """
        if not records:
            return 0
        lo = records[0].x
        if lo > self.count + 1:
            return 0
        added = 0
        for rec in records[self.count + 1 - lo:]:
            if rec.x != self.count + 1:
                raise ValueError(f"records are not contiguous at x={rec.x}")
            if rec.sigma > _U32_MAX or rec.odd_steps > _U32_MAX:
                raise ValueError(f"stopping data for x={rec.x} exceeds u32 range")
            self._sigma.append(rec.sigma)
            self._odd.append(rec.odd_steps)
            added += 1
        return added

    @classmethod
    def load(cls, path: str | Path) -> "StoppingCache":
        """Read a cache file; a missing file yields an empty cache."""
        cache = cls()
        path = Path(path)
        if not path.exists():
            return cache
        raw = path.read_bytes()
        if len(raw) < _HEADER.size:
            raise ValueError(f"{path}: truncated cache header")
        magic, version, _, count = _HEADER.unpack_from(raw)
        if magic != _MAGIC:
            raise ValueError(f"{path}: not a stopping cache file")
        if version != _VERSION:
            raise ValueError(f"{path}: unsupported cache version {version}")
        body = raw[_HEADER.size:]
        if len(body) != 2 * 4 * count:
            raise ValueError(f"{path}: cache payload size mismatch")
        cache._sigma.frombytes(body[: 4 * count])
        cache._odd.frombytes(body[4 * count:])
        if sys.byteorder == "big":
            cache._sigma.byteswap()
            cache._odd.byteswap()
        return cache

    def save(self, path: str | Path) -> None:
        path = Path(path)
        sig, odd = self._sigma, self._odd
        if sys.byteorder == "big":
            sig, odd = array("I", sig), array("I", odd)
            sig.byteswap()
            odd.byteswap()
        with open(path, "wb") as fp:
            fp.write(_HEADER.pack(_MAGIC, _VERSION, 0, self.count))
            fp.write(sig.tobytes())
            fp.write(odd.tobytes())

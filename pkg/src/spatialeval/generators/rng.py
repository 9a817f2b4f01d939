"""Splittable counter-based pseudo-random stream.

Instance generation must be byte-identical across platforms and across
worker counts, so we avoid ``random.Random`` (whose state is shared and
whose float rounding we do not control) and derive every stream from a
SHA-256 counter. Streams are split by path, never shared.
"""

from __future__ import annotations

import hashlib

_MASK64 = (1 << 64) - 1


class Stream:
    """Deterministic random stream keyed by a 64-bit seed and a path.

    The same (seed, path) always yields the same sequence, regardless of
    platform, interpreter or how many other streams were consumed.
    """

    def __init__(self, seed: int, *path: object):
        key = ("/".join(str(p) for p in path)).encode("utf-8")
        self._base = hashlib.sha256(seed.to_bytes(8, "little", signed=False) + b"|" + key).digest()
        self._counter = 0
        self._buffer = b""

    def split(self, *path: object) -> "Stream":
        """Derive an independent child stream; never advances this one."""
        child = Stream.__new__(Stream)
        key = ("/".join(str(p) for p in path)).encode("utf-8")
        child._base = hashlib.sha256(self._base + b"|" + key).digest()
        child._counter = 0
        child._buffer = b""
        return child

    def _refill(self) -> None:
        block = hashlib.sha256(self._base + self._counter.to_bytes(8, "little")).digest()
        self._counter += 1
        self._buffer += block

    def bytes(self, n: int) -> bytes:
        while len(self._buffer) < n:
            self._refill()
        out, self._buffer = self._buffer[:n], self._buffer[n:]
        return out

    def u64(self) -> int:
        return int.from_bytes(self.bytes(8), "little")

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive, rejection-sampled."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        # Rejection keeps the distribution exactly uniform.
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % span)
        while True:
            v = self.u64()
            if v < limit:
                return lo + (v % span)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        # 53-bit mantissa, same construction as random.random().
        return lo + (hi - lo) * ((self.u64() >> 11) / (1 << 53))

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randint(0, i)
            seq[i], seq[j] = seq[j], seq[i]

    def sample(self, seq, k: int) -> list:
        pool = list(seq)
        self.shuffle(pool)
        return pool[:k]

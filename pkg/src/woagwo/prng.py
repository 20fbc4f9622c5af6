"""Replayable random streams built on SplitMix64.

SplitMix64 (Steele, Lea & Flood 2014; reference code by S. Vigna) is a
counter-based generator: the i-th output of a stream seeded with ``s`` is
``mix(s + i * GAMMA)`` for i = 1, 2, ...  That makes a block of draws a pure
function of ``(seed, counter)``, which is what lets the numba and numpy
paths produce the same numbers. Reference sequence for seed 1234567:
6457827717110365317, 3203168211198807973, 9817491932198370423, ...

Doubles use the top 53 bits: ``(u >> 11) * 2**-53``, so they lie in [0, 1).
"""
from __future__ import annotations

import math

import numpy as np

from ._jit import njit, pick

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_SPLIT_SALT = 0xD1B54A32D192ED03
_INV53 = 1.0 / (1 << 53)


class InvalidRangeError(ValueError):
    pass


def mix64(z: int) -> int:
    """SplitMix64 output finalizer on a Python int."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


@njit
def _block_jit(seed, start, n):
    out = np.empty(n, dtype=np.float64)
    g = np.uint64(GAMMA)
    state = seed + start * g
    for i in range(n):
        state += g
        z = state
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
        z = z ^ (z >> np.uint64(31))
        out[i] = np.float64(z >> np.uint64(11)) * _INV53
    return out


def _block_numpy(seed, start, n):
    # uint64 array arithmetic wraps modulo 2**64 without warnings
    i = np.arange(1, n + 1, dtype=np.uint64) + start
    z = seed + i * np.uint64(GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * _INV53


_block = pick(_block_jit, _block_numpy)


class RandomStream:
    """A seeded SplitMix64 stream. Single owner; use :meth:`split` for workers."""

    __slots__ = ("seed", "counter")

    def __init__(self, seed: int, counter: int = 0):
        self.seed = int(seed) & MASK64
        self.counter = int(counter)

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, counter={self.counter})"

    def next_u64(self) -> int:
        self.counter += 1
        return mix64(self.seed + self.counter * GAMMA)

    def random(self, size=None):
        """Uniform doubles in [0, 1); a float when ``size`` is None, else an array."""
        if size is None:
            return float(self.random(1)[0])
        shape = (size,) if isinstance(size, (int, np.integer)) else tuple(size)
        n = int(np.prod(shape, dtype=np.int64))
        out = _block(np.uint64(self.seed), np.uint64(self.counter), n)
        self.counter += n
        return out.reshape(shape)

    def uniform(self, lo, hi, size=None):
        lo_a = np.asarray(lo, dtype=float)
        hi_a = np.asarray(hi, dtype=float)
        if not (np.all(np.isfinite(lo_a)) and np.all(np.isfinite(hi_a))) or np.any(lo_a >= hi_a):
            raise InvalidRangeError(f"need finite lo < hi, got lo={lo!r}, hi={hi!r}")
        u = self.random(size)
        v = lo_a + (hi_a - lo_a) * u
        # lo + (hi - lo) * u can round up to hi
        v = np.where(v >= hi_a, np.nextafter(hi_a, lo_a), v)
        if size is None and v.ndim == 0:
            return float(v)
        return v

    def integers(self, n: int, size=None):
        """Uniform integers in [0, n)."""
        u = self.random(size)
        k = np.minimum(np.floor(np.asarray(u) * n), n - 1).astype(np.int64)
        if size is None:
            return int(k)
        return k

    def split(self, index: int) -> "RandomStream":
        return split(self, index)

    def copy(self) -> "RandomStream":
        return RandomStream(self.seed, self.counter)


def new_stream(seed: int) -> RandomStream:
    if int(seed) < 0 or int(seed) > MASK64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return RandomStream(seed)


def uniform(stream: RandomStream, lo: float, hi: float) -> float:
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise InvalidRangeError(f"need finite lo < hi, got lo={lo!r}, hi={hi!r}")
    return stream.uniform(lo, hi)


def split(stream: RandomStream, index: int) -> RandomStream:
    """Child stream keyed by (parent seed, index); the parent's counter is ignored."""
    index = int(index) & MASK64
    child = mix64(mix64(stream.seed ^ _SPLIT_SALT) + (index + 1) * GAMMA)
    return RandomStream(child)

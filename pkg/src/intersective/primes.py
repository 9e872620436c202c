"""Prime enumeration by segmented sieve and deterministic 64-bit primality."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

import numpy as np

# Odd candidates per sieve slab.  2**18 odds span 2**19 integers, keeping the
# working mask near 256 KiB; raise it for fewer slab setups on long ranges.
SEGMENT_ODDS = 1 << 18

# The base sieve runs to sqrt(hi), so this keeps it within 10**6.
MAX_SIEVE_BOUND = 10**12

_U64 = 1 << 64

# Witness set with no strong pseudoprime below 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimeRange:
    """Inclusive range [lo, hi] of candidate primes."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 2:
            raise ValueError("prime range must start at 2 or above")
        if self.hi < self.lo:
            raise ValueError(f"empty prime range [{self.lo}, {self.hi}]")
        if self.hi >= _U64:
            raise ValueError("prime range end exceeds 64-bit magnitude")


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2**64.

    Miller-Rabin with a fixed witness set that is exact over the full
    64-bit range; larger inputs are rejected rather than answered
    probabilistically.
    """
    if n < 0:
        raise ValueError("primality is defined for nonnegative integers")
    if n >= _U64:
        raise ValueError("is_prime only certifies integers below 2**64")
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _odd_base_primes(limit: int) -> np.ndarray:
    """Odd primes <= limit via a plain odd-only sieve."""
    if limit < 3:
        return np.empty(0, dtype=np.int64)
    half = (limit - 1) // 2
    mask = np.ones(half + 1, dtype=bool)  # index i <-> 2*i + 1
    mask[0] = False
    i = 1
    while (2 * i + 1) * (2 * i + 1) <= limit:
        if mask[i]:
            p = 2 * i + 1
            mask[(p * p - 1) // 2 :: p] = False
        i += 1
    return 2 * np.flatnonzero(mask).astype(np.int64) + 1


def iter_prime_arrays(lo: int, hi: int) -> Iterator[np.ndarray]:
    """Yield the primes in [lo, hi] as ascending int64 arrays, one per slab.

    Slab boundaries are fixed by SEGMENT_ODDS and independent of callers,
    so concatenating the arrays for adjacent ranges reproduces the primes
    of the union exactly.
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"invalid sieve range [{lo}, {hi}]")
    if hi > MAX_SIEVE_BOUND:
        raise ValueError(f"sieve range end {hi} exceeds {MAX_SIEVE_BOUND}")
    if lo <= 2 <= hi:
        yield np.array([2], dtype=np.int64)
    start = max(lo, 3)
    if start % 2 == 0:
        start += 1
    if start > hi:
        return
    base = _odd_base_primes(isqrt(hi))
    span = 2 * SEGMENT_ODDS
    seg_lo = start
    while seg_lo <= hi:
        seg_hi = min(seg_lo + span - 2, hi)  # inclusive, odd
        if seg_hi % 2 == 0:
            seg_hi -= 1
        n_odds = (seg_hi - seg_lo) // 2 + 1
        mask = np.ones(n_odds, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > seg_hi:
                break
            first = max(p * p, ((seg_lo + p - 1) // p) * p)
            if first % 2 == 0:
                first += p
            if first > seg_hi:
                continue
            mask[(first - seg_lo) // 2 :: p] = False
        primes = seg_lo + 2 * np.flatnonzero(mask).astype(np.int64)
        if primes.size:
            yield primes
        seg_lo += span


def primes_in(lo: int, hi: int) -> Iterator[int]:
    """Yield the primes in [lo, hi] in increasing order."""
    for arr in iter_prime_arrays(lo, hi):
        for p in arr.tolist():
            yield p

"""Baillie-PSW primality: Miller-Rabin base 2 plus a strong Lucas test.

Lucas parameters follow Selfridge's Method A. Verdicts for operands
longer than 64 bits are cached by value; the small-number path stays
cache-free so bulk agreement sweeps are not penalized.
"""

from __future__ import annotations

import math
from threading import Lock

# Product of odd primes up to 53; one gcd rejects most composites.
_SMALL_PRIME_PRODUCT = 16294579238595022365
_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)

_CACHE_BIT_THRESHOLD = 64
_cache: dict[int, bool] = {}
_cache_lock = Lock()


def _miller_rabin_base2(n: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(2, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    # n odd positive.
    a %= n
    result = 1
    while a:
        while a & 1 == 0:
            a >>= 1
            if n & 7 in (3, 5):
                result = -result
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _selfridge_d(n: int) -> int | None:
    """First D in 5, -7, 9, -11, ... with Jacobi(D, n) = -1.

    Returns None when n is a perfect square (no such D exists).
    """
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            return d
        if j == 0 and abs(d) != n:
            return 0  # shares a factor with n
        if d == 13:
            # Only squares survive this far in practice; check once.
            r = math.isqrt(n)
            if r * r == n:
                return None
        d = -(d + 2) if d > 0 else -(d - 2)


def _strong_lucas(n: int) -> bool:
    d = _selfridge_d(n)
    if d is None or d == 0:
        return False
    q = (1 - d) // 4

    # Factor n+1 = 2^s * m with m odd.
    m = n + 1
    s = (m & -m).bit_length() - 1
    m >>= s

    # Binary chain for U_m, V_m with P = 1.
    u, v = 1, 1
    qk = q % n
    for bit in bin(m)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = u + v, v + d * u
            if u & 1:
                u += n
            if v & 1:
                v += n
            u = (u >> 1) % n
            v = (v >> 1) % n
            qk = qk * q % n

    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime_bpsw(n: int) -> bool:
    """Baillie-PSW verdict for a non-negative integer."""
    if n < 2:
        return False
    if n < 64:
        return n in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)
    if n & 1 == 0:
        return False
    g = math.gcd(n, _SMALL_PRIME_PRODUCT)
    if g != 1:
        return n in _SMALL_PRIMES

    big = n.bit_length() > _CACHE_BIT_THRESHOLD
    if big:
        with _cache_lock:
            hit = _cache.get(n)
        if hit is not None:
            return hit

    verdict = _miller_rabin_base2(n) and _strong_lucas(n)

    if big:
        with _cache_lock:
            _cache[n] = verdict
    return verdict


def prime_sieve(limit: int) -> bytearray:
    """Sieve of Eratosthenes; byte i is 1 iff i is prime. Test oracle."""
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return flags

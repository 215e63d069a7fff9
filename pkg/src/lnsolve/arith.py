"""Exact integer primitives over the fixed prime set {3, 113}.

Nothing here touches floating point; every root is checked by powering back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

S_PRIMES = (3, 113)


@dataclass(frozen=True)
class SUnitDecomposition:
    exp3: int
    exp113: int
    cofactor: int

    def __post_init__(self):
        if self.exp3 < 0 or self.exp113 < 0 or self.cofactor < 1:
            raise ValueError(f"invalid decomposition {self}")
        if math.gcd(self.cofactor, 3 * 113) != 1:
            raise ValueError(f"cofactor {self.cofactor} shares a factor with 339")

    @property
    def value(self) -> int:
        return 3**self.exp3 * 113**self.exp113 * self.cofactor

    @property
    def is_s_unit(self) -> bool:
        return self.cofactor == 1


def int_sqrt(n: int) -> Optional[int]:
    """Return ``r`` with ``r*r == n`` if ``n`` is a perfect square, else None."""
    if n < 0:
        raise ValueError("int_sqrt requires n >= 0")
    r = math.isqrt(n)
    return r if r * r == n else None


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if n < 0:
        raise ValueError("iroot requires n >= 0")
    if k < 1:
        raise ValueError("iroot requires k >= 1")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def icbrt_ceil(n: int) -> int:
    """Smallest non-negative integer m with m**3 >= n (n >= 0)."""
    r = iroot(n, 3)
    return r if r**3 == n else r + 1


def is_perfect_power(n: int, k: int) -> Optional[int]:
    """Return ``b`` with ``b**k == n``, or None."""
    if n < 2 or k < 2:
        raise ValueError("is_perfect_power requires n >= 2 and k >= 2")
    b = iroot(n, k)
    return b if b**k == n else None


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd positive m."""
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"jacobi requires odd positive modulus, got {m}")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def valuation(n: int, p: int) -> tuple[int, int]:
    """Return ``(e, r)`` with ``n == p**e * r`` and ``p`` not dividing ``r``."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def s_decompose(n: int) -> SUnitDecomposition:
    if n < 1:
        raise ValueError(f"s_decompose requires n >= 1, got {n}")
    e3, n = valuation(n, 3)
    e113, n = valuation(n, 113)
    return SUnitDecomposition(e3, e113, n)


def s_unit(exp3: int, exp113: int) -> int:
    return 3**exp3 * 113**exp113

"""Direct search over (y, n, alpha, beta), independent of every reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import int_sqrt
from .equation import Solution


@dataclass(frozen=True)
class SearchBudget:
    y_max: int
    n_max: int
    n_min: int = 3
    magnitude_cap: Optional[int] = None

    def __post_init__(self):
        if self.y_max < 1 or self.n_min < 3 or self.n_max < self.n_min:
            raise ValueError(f"invalid budget {self}")
        if self.magnitude_cap is not None and self.magnitude_cap < 1:
            raise ValueError("magnitude cap must be positive")


def _s_values(limit: int, p: int, q: int) -> list[tuple[int, int, int]]:
    """All (p^a q^b, a, b) below ``limit``, increasing."""
    out = []
    pa, a = 1, 0
    while pa < limit:
        v, b = pa, 0
        while v < limit:
            out.append((v, a, b))
            v *= q
            b += 1
        pa *= p
        a += 1
    out.sort()
    return out


def brute_force(budget: SearchBudget, primes: tuple[int, int] = (3, 113)) -> list[Solution]:
    p, q = primes
    if p == q:
        raise ValueError("primes must be distinct")
    top = budget.y_max**budget.n_max
    if budget.magnitude_cap is not None:
        top = min(top, budget.magnitude_cap)
    s_values = _s_values(top, p, q)
    found = []
    for y in range(1, budget.y_max + 1):
        for n in range(budget.n_min, budget.n_max + 1):
            yn = y**n
            if budget.magnitude_cap is not None and yn > budget.magnitude_cap:
                break
            for c, alpha, beta in s_values:
                if c >= yn:
                    break
                x = int_sqrt(yn - c)
                if x and math.gcd(x, y) == 1:
                    found.append(Solution(x, y, n, alpha, beta, primes))
    return found

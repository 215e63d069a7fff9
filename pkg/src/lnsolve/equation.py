"""The equation x^2 + 3^alpha * 113^beta = y^n and its verified solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass


def check_identity(x: int, y: int, n: int, alpha: int, beta: int, primes=(3, 113)) -> bool:
    """Both sides recomputed from scratch; only multiplication and subtraction."""
    p, q = primes
    lhs = x * x
    c = 1
    for _ in range(alpha):
        c *= p
    for _ in range(beta):
        c *= q
    rhs = 1
    for _ in range(n):
        rhs *= y
    return rhs - lhs - c == 0


def is_solution(x: int, y: int, n: int, alpha: int, beta: int, primes=(3, 113)) -> bool:
    return (
        x >= 1
        and y >= 1
        and n >= 3
        and alpha >= 0
        and beta >= 0
        and math.gcd(x, y) == 1
        and x * x + primes[0] ** alpha * primes[1] ** beta == y**n
    )


@dataclass(frozen=True, order=True)
class Solution:
    """A coprime positive solution ``(x, y, n, alpha, beta)`` of
    ``x^2 + p^alpha q^beta = y^n`` with ``(p, q) = primes``.

    Construction fails unless the identity and the coprimality hold.
    """

    x: int
    y: int
    n: int
    alpha: int
    beta: int
    primes: tuple = (3, 113)

    def __post_init__(self):
        if not is_solution(self.x, self.y, self.n, self.alpha, self.beta, self.primes):
            raise ValueError(f"{self.as_tuple()} is not a coprime positive solution")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.x, self.y, self.n, self.alpha, self.beta)

    def __str__(self):
        return "(" + ", ".join(map(str, self.as_tuple())) + ")"


def try_solution(x: int, y: int, n: int, alpha: int, beta: int):
    """The :class:`Solution` if the tuple qualifies, else None."""
    if is_solution(x, y, n, alpha, beta):
        return Solution(x, y, n, alpha, beta)
    return None


THEOREM_SOLUTIONS = frozenset(
    Solution(*t)
    for t in [
        (2, 7, 3, 1, 1),
        (1232, 115, 3, 3, 1),
        (23642486, 82375, 3, 9, 1),
        (46, 13, 3, 4, 0),
        (10, 7, 3, 5, 0),
    ]
)

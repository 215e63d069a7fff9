"""Exponent n = 3: reduction to the 36 Mordell curves and lifting back."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curves import (
    DEFAULT_MORDELL_BOUNDS,
    MordellCurve,
    SIntegralPoint,
    mordell_curves,
    search_many,
    verify_point,
)
from .equation import Solution, try_solution


@dataclass(frozen=True)
class ExponentClass:
    """``alpha = modulus*a1 + i`` and ``beta = modulus*b1 + j``."""

    i: int
    j: int
    a1: int
    b1: int
    modulus: int = 6

    @classmethod
    def of(cls, alpha: int, beta: int, modulus: int = 6) -> "ExponentClass":
        a1, i = divmod(alpha, modulus)
        b1, j = divmod(beta, modulus)
        return cls(i, j, a1, b1, modulus)

    @property
    def alpha(self) -> int:
        return self.modulus * self.a1 + self.i

    @property
    def beta(self) -> int:
        return self.modulus * self.b1 + self.j


def lift_point(point: SIntegralPoint, curve: MordellCurve) -> Optional[Solution]:
    """Map ``(M, L) = (y/v^2, x/v^3)`` back to ``(x, y, 3, alpha, beta)``.

    The denominator exponents of the point fix ``a1, b1``: a larger choice
    would put 3 or 113 into ``gcd(x, y)``.
    """
    if not verify_point(curve, point):
        raise ValueError(f"{point} does not lie on {curve.curve_id}")
    cls = ExponentClass(curve.i, curve.j, point.a, point.b)
    # M = m/v^2 -> y = m; L = l/v^3 -> x = |l|
    return try_solution(abs(point.ynum), point.xnum, 3, cls.alpha, cls.beta)


def project_solution(sol: Solution) -> tuple[MordellCurve, SIntegralPoint]:
    """Inverse of :func:`lift_point` for an n = 3 solution."""
    if sol.n != 3:
        raise ValueError("only n = 3 solutions live on the Mordell curves")
    cls = ExponentClass.of(sol.alpha, sol.beta)
    return MordellCurve(cls.i, cls.j), SIntegralPoint(sol.y, sol.x, cls.a1, cls.b1)


def solve_n3(
    height_bound: int = DEFAULT_MORDELL_BOUNDS[0],
    denom_bound: int = DEFAULT_MORDELL_BOUNDS[1],
    jobs: int = 1,
    points_out: Optional[list] = None,
) -> list[Solution]:
    """All n = 3 solutions whose curve points fall within the bounds.

    If ``points_out`` is a list, ``(curve, point)`` pairs are appended to it.
    """
    found = set()
    for curve, points in search_many(mordell_curves(), height_bound, denom_bound, jobs):
        for p in points:
            if points_out is not None:
                points_out.append((curve, p))
            sol = lift_point(p, curve)
            if sol is not None:
                found.add(sol)
    return sorted(found)

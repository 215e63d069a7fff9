"""Exponent n = 4: reduction to the 16 quartics ``A^2 = B^4 - 3^i 113^j``."""

from __future__ import annotations

from typing import Optional

from .curves import (
    DEFAULT_QUARTIC_BOUNDS,
    QuarticCurve,
    SIntegralPoint,
    quartic_curves,
    search_many,
    verify_point,
)
from .equation import Solution, try_solution
from .sieve_n3 import ExponentClass


def lift_quartic_point(point: SIntegralPoint, curve: QuarticCurve) -> Optional[Solution]:
    """``(B, A) = (y/w, x/w^2)`` back to ``(x, y, 4, 4a1 + i, 4b1 + j)``."""
    if not verify_point(curve, point):
        raise ValueError(f"{point} does not lie on {curve.curve_id}")
    cls = ExponentClass(curve.i, curve.j, point.a, point.b, modulus=4)
    return try_solution(abs(point.ynum), point.xnum, 4, cls.alpha, cls.beta)


def solve_n4(
    height_bound: int = DEFAULT_QUARTIC_BOUNDS[0],
    denom_bound: int = DEFAULT_QUARTIC_BOUNDS[1],
    jobs: int = 1,
    points_out: Optional[list] = None,
) -> list[Solution]:
    found = set()
    for curve, points in search_many(quartic_curves(), height_bound, denom_bound, jobs):
        for p in points:
            if points_out is not None:
                points_out.append((curve, p))
            sol = lift_quartic_point(p, curve)
            if sol is not None:
                found.add(sol)
    return sorted(found)

"""Exponents n >= 5: primitive-divisor elimination over Q(sqrt(-d)).

Writing ``3^alpha 113^beta = d * e^2`` with ``d`` squarefree, a solution gives
``x + e*sqrt(-d) = xi^n`` for an integer ``xi`` of ``Q(sqrt(-d))`` (the class
number and unit group orders are prime to n). Then ``e`` (or ``2e`` for the
half-integral basis) equals ``t * L_n`` for the Lucas sequence of
``(xi, conj(xi))``, so every primitive divisor of ``L_n`` is 3 or 113. The
residue condition on primitive divisors leaves two cells: ``d = 1, n = 7``,
settled here by the delta-cubic searches, and ``d = 3, n = 19``, which is
reported as excluded.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .arith import s_decompose
from .curves import DEFAULT_DELTA_BOUNDS, DeltaCubic, SIntegralPoint, delta_cubic_points, verify_point
from .equation import Solution, try_solution
from .lucas import QuadraticInteger, congruence_holds

FIELD_DISCRIMINANT_D = (1, 3, 113, 339)
CLASS_NUMBERS = {1: 1, 3: 1, 113: 8, 339: 6}
UNIT_ORDERS = {1: 4, 3: 6, 113: 2, 339: 2}
CANDIDATE_PRIMES = (3, 113)

assert set(CLASS_NUMBERS.values()) == {1, 6, 8}


class Verdict(enum.Enum):
    ELIMINATED_PARITY = "eliminated-parity"
    ELIMINATED_CLASS_NUMBER = "eliminated-class-number"
    ELIMINATED_NO_CANDIDATE = "eliminated-no-candidate"
    FORCES_N7 = "forces-n7"
    FORCES_N19_EXCLUDED = "forces-n19-excluded"
    OUT_OF_METHOD = "out-of-method"


@dataclass(frozen=True)
class FieldCase:
    d: int
    half: bool
    class_number: int
    e_exp3: int = 0
    e_exp113: int = 0

    def __post_init__(self):
        if self.d not in CLASS_NUMBERS:
            raise ValueError(f"d must be one of {FIELD_DISCRIMINANT_D}")
        if self.half != (self.d % 4 == 3):
            raise ValueError(f"basis flag inconsistent with d = {self.d}")
        if self.class_number != CLASS_NUMBERS[self.d]:
            raise ValueError(f"class number of Q(sqrt(-{self.d})) is {CLASS_NUMBERS[self.d]}")

    @classmethod
    def for_d(cls, d: int) -> "FieldCase":
        return cls(d, d % 4 == 3, CLASS_NUMBERS[d])

    @property
    def D(self) -> int:
        """(xi - conj(xi))^2 with t = 1; a general t multiplies it by t^2."""
        return -self.d if self.half else -4 * self.d


@dataclass(frozen=True)
class SieveOutcome:
    d: int
    n: int
    verdict: Verdict
    candidate: Optional[int] = None


@dataclass(frozen=True)
class ReducedExponent:
    """The exponent a solution for ``n`` reduces to."""

    n: int
    exponent: int
    excluded: bool = False


def _smallest_odd_prime_factor(n: int) -> Optional[int]:
    while n % 2 == 0:
        n //= 2
    if n == 1:
        return None
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


def normalize_exponent(n: int) -> ReducedExponent:
    """A solution with exponent ``n`` is one for the returned exponent
    (``y^n = (y^(n/m))^m``): 4 if ``4 | n``, 3 if ``3 | n``, otherwise the
    least odd prime factor. Landing on 19 is flagged as excluded."""
    if n < 3:
        raise ValueError(f"exponent must be >= 3, got {n}")
    if n % 4 == 0:
        return ReducedExponent(n, 4)
    if n % 3 == 0:
        return ReducedExponent(n, 3)
    p = _smallest_odd_prime_factor(n)
    return ReducedExponent(n, p, excluded=(p == 19))


def parity_obstruction(alpha: int) -> bool:
    """True when even ``y`` is impossible.

    ``y`` even forces ``x`` odd, and then ``1 + 3^alpha = 0 (mod 8)``;
    but ``1 + 3^alpha`` is 2 or 4 mod 8.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    return (1 + pow(3, alpha, 8)) % 8 != 0


def field_case(alpha: int, beta: int) -> FieldCase:
    d = 3 ** (alpha % 2) * 113 ** (beta % 2)
    fc = FieldCase.for_d(d)
    return FieldCase(fc.d, fc.half, fc.class_number, alpha // 2, beta // 2)


def primitive_divisor_sieve(fc: FieldCase, n: int) -> SieveOutcome:
    """Which primitive divisor of ``L_n`` could exist for this field and prime n.

    Absence of any primitive divisor is not re-examined: the defective Lucas
    pairs are finite and tabulated elsewhere, and the field cases here do not
    meet them.
    """
    if n < 5 or _smallest_odd_prime_factor(n) != n:
        raise ValueError(f"n must be an odd prime >= 5, got {n}")
    if math.gcd(n, fc.class_number) != 1:
        return SieveOutcome(fc.d, n, Verdict.ELIMINATED_CLASS_NUMBER)
    if math.gcd(n, UNIT_ORDERS[fc.d]) != 1:
        raise AssertionError("unit group order shares a factor with n")
    for q in CANDIDATE_PRIMES:
        # q | d means q | (xi - conj xi)^2, and q | t likewise; otherwise t^2
        # does not change the Legendre symbol
        if fc.d % q == 0:
            continue
        if not congruence_holds(fc.D, q, n):
            continue
        if n == 7:
            return SieveOutcome(fc.d, n, Verdict.FORCES_N7, q)
        if n == 19:
            return SieveOutcome(fc.d, n, Verdict.FORCES_N19_EXCLUDED, q)
        return SieveOutcome(fc.d, n, Verdict.OUT_OF_METHOD, q)
    return SieveOutcome(fc.d, n, Verdict.ELIMINATED_NO_CANDIDATE)


def odd_primes(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 3), hi + 1) if p % 2 and _smallest_odd_prime_factor(p) == p]


def sieve_table(n_max: int = 97) -> list[SieveOutcome]:
    return [
        primitive_divisor_sieve(FieldCase.for_d(d), n)
        for n in odd_primes(5, n_max)
        for d in FIELD_DISCRIMINANT_D
    ]


# n = 7, d = 1:  t * (7s^6 - 35s^4 t^2 + 21 s^2 t^4 - t^6) = 3^a 113^b

UNIT_T_DELTAS = (1, 113, 3, 339, -1, -113, -3, -339)
POWER_OF_3_T_DELTAS = (1, 113, -1, -113)


def solution_from_st(s: int, t: int, n: int = 7) -> Optional[Solution]:
    """Expand ``(s + t i)^n = x + e i`` and keep it if ``e`` is a {3,113}-unit."""
    x, e = QuadraticInteger(s, t, 1).power_numerator(n)
    if e == 0:
        return None
    dec = s_decompose(abs(e))
    if not dec.is_s_unit:
        return None
    return try_solution(abs(x), s * s + t * t, n, 2 * dec.exp3, 2 * dec.exp113)


def lift_delta_point(point: SIntegralPoint, curve: DeltaCubic) -> Optional[Solution]:
    """Back-solve ``V = 7 delta s^2 / t^2`` with ``t = +-3^a`` (``a`` read off the
    denominator of V) and ``7 delta^2 Y = W``."""
    if not verify_point(curve, point):
        raise ValueError(f"{point} does not lie on {curve.curve_id}")
    delta = curve.delta
    q, r = divmod(point.xnum, 7 * delta)
    if r or q < 0:
        return None
    s = math.isqrt(q)
    if s * s != q:
        return None
    y_num, r = divmod(point.ynum, 7 * delta * delta)
    if r or y_num == 0:
        return None
    y_dec = s_decompose(abs(y_num))
    if not y_dec.is_s_unit:
        return None
    t = 3**point.a
    for sign in (1, -1):
        sol = solution_from_st(s, sign * t)
        if sol is not None:
            return sol
    return None


def solve_n7(
    height_bound: int = DEFAULT_DELTA_BOUNDS[0],
    denom3_bound: int = DEFAULT_DELTA_BOUNDS[1],
    points_out: Optional[list] = None,
) -> list[Solution]:
    """Search both sub-cases ``t = +-1`` and ``t = +-3^a``; ``points_out``
    collects ``(curve, point)`` pairs."""
    found = set()
    runs = [(d, 0) for d in UNIT_T_DELTAS]
    if denom3_bound >= 1:
        runs += [(d, denom3_bound) for d in POWER_OF_3_T_DELTAS]
    seen = set()
    for delta, a_max in runs:
        curve = DeltaCubic(delta)
        for p in delta_cubic_points(curve, height_bound, a_max):
            if (delta, p) in seen:
                continue
            seen.add((delta, p))
            if points_out is not None:
                points_out.append((curve, p))
            sol = lift_delta_point(p, curve)
            if sol is not None:
                assert sol.alpha % 2 == 0 and sol.beta % 2 == 0
                found.add(sol)
    return sorted(found)

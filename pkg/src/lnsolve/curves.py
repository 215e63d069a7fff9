"""Bounded enumeration of S-integral points on the reduction curves.

Three families occur:

* Mordell curves ``L^2 = M^3 - 3^i 113^j`` with ``0 <= i, j <= 5``;
* quartics ``A^2 = B^4 - 3^i 113^j`` with ``0 <= i, j <= 3``;
* the cubics ``W^2 = V^3 - 35 d V^2 + 147 d^2 V - 49 d^3`` for
  ``d in {+-1, +-3, +-113, +-339}``.

A point with denominator ``u`` is written ``(m/u^2, w/u^3)`` on the cubics and
``(b/u, a/u^2)`` on the quartics, with ``gcd(m, u) = 1`` (resp. ``gcd(b, u) = 1``).
Searches are exhaustive over numerators ``|m| <= height_bound`` and
denominators built from at most ``denom_bound`` prime factors; nothing beyond
those bounds is claimed.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .arith import icbrt_ceil, int_sqrt, iroot

DEFAULT_MORDELL_BOUNDS = (10**6, 2)
DEFAULT_QUARTIC_BOUNDS = (10**3, 2)
DEFAULT_DELTA_BOUNDS = (2 * 10**4, 1)

DELTAS = (1, 113, 3, 339, -1, -113, -3, -339)

_CHUNK = 1 << 20
_MAX_NUMPY = 1 << 62
_SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _squares_mod(q: int) -> np.ndarray:
    mask = np.zeros(q, dtype=bool)
    mask[(np.arange(q, dtype=np.int64) ** 2) % q] = True
    return mask


_SQUARE_MASKS = {q: _squares_mod(q) for q in _SIEVE_MODULI}


def denominators(denom_bound: int) -> list[tuple[int, int]]:
    """Exponent pairs ``(a, b)`` of ``3^a 113^b`` with ``a + b <= denom_bound``,
    ordered by the value of the denominator."""
    pairs = [(a, b) for a in range(denom_bound + 1) for b in range(denom_bound + 1 - a)]
    return sorted(pairs, key=lambda ab: 3 ** ab[0] * 113 ** ab[1])


@dataclass(frozen=True)
class SIntegralPoint:
    """A point ``(xnum/u^xw, ynum/u^yw)`` with ``u = 3^a 113^b``."""

    xnum: int
    ynum: int
    a: int = 0
    b: int = 0
    x_weight: int = 2
    y_weight: int = 3

    @property
    def denominator(self) -> int:
        return 3**self.a * 113**self.b

    @property
    def x(self) -> Fraction:
        return Fraction(self.xnum, self.denominator**self.x_weight)

    @property
    def y(self) -> Fraction:
        return Fraction(self.ynum, self.denominator**self.y_weight)

    def sort_key(self):
        return (self.denominator, self.xnum, self.ynum)

    def __str__(self):
        return f"{_frac(self.x)} {_frac(self.y)}"


def _frac(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class MordellCurve:
    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i <= 5 and 0 <= self.j <= 5):
            raise ValueError(f"Mordell class ({self.i}, {self.j}) outside [0,5]^2")

    @property
    def k(self) -> int:
        return -(3**self.i) * 113**self.j

    @property
    def curve_id(self) -> str:
        return f"mordell[{self.i},{self.j}]"

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return y * y == x**3 + self.k


@dataclass(frozen=True)
class QuarticCurve:
    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i <= 3 and 0 <= self.j <= 3):
            raise ValueError(f"quartic class ({self.i}, {self.j}) outside [0,3]^2")

    @property
    def c(self) -> int:
        return 3**self.i * 113**self.j

    @property
    def curve_id(self) -> str:
        return f"quartic[{self.i},{self.j}]"

    def contains(self, x: Fraction, y: Fraction) -> bool:
        # x is B, y is A
        return y * y == x**4 - self.c


@dataclass(frozen=True)
class DeltaCubic:
    delta: int

    def __post_init__(self):
        if self.delta not in DELTAS:
            raise ValueError(f"delta must be one of {DELTAS}, got {self.delta}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        """(c2, c4, c6) of ``W^2 = V^3 + c2 V^2 + c4 V + c6``."""
        d = self.delta
        return (-35 * d, 147 * d * d, -49 * d**3)

    @property
    def curve_id(self) -> str:
        return f"delta[{self.delta}]"

    def contains(self, x: Fraction, y: Fraction) -> bool:
        c2, c4, c6 = self.coefficients
        return y * y == x**3 + c2 * x * x + c4 * x + c6


Curve = Union[MordellCurve, QuarticCurve, DeltaCubic]


def mordell_curves() -> list[MordellCurve]:
    return [MordellCurve(i, j) for i in range(6) for j in range(6)]


def quartic_curves() -> list[QuarticCurve]:
    return [QuarticCurve(i, j) for i in range(4) for j in range(4)]


def delta_cubics() -> list[DeltaCubic]:
    return [DeltaCubic(d) for d in DELTAS]


def _cubic_square_numerators(
    c2: int, c4: int, c6: int, lo: int, hi: int, coprime_to: Sequence[int] = ()
) -> list[tuple[int, int]]:
    """All ``(m, w)`` with ``lo <= m <= hi``, ``w >= 0`` and
    ``w^2 = m^3 + c2 m^2 + c4 m + c6``, skipping ``m`` divisible by a prime in
    ``coprime_to``.

    Candidates are screened by quadratic-residue tables in numpy; survivors
    are confirmed with exact integer square roots.
    """
    if lo > hi:
        return []
    if max(abs(lo), abs(hi)) >= _MAX_NUMPY:
        raise ValueError("height bound too large for the sieve (must stay below 2^62)")
    tables = []
    for q in _SIEVE_MODULI:
        r = np.arange(q, dtype=np.int64)
        val = (r * r % q * r + (c2 % q) * (r * r % q) + (c4 % q) * r + (c6 % q)) % q
        tables.append((q, _SQUARE_MASKS[q][val]))
    found = []
    start = lo
    while start <= hi:
        stop = min(hi, start + _CHUNK - 1)
        m = np.arange(start, stop + 1, dtype=np.int64)
        for p in coprime_to:
            m = m[m % p != 0]
        for q, table in tables:
            if m.size == 0:
                break
            m = m[table[m % q]]
        for mv in m.tolist():
            rhs = mv**3 + c2 * mv * mv + c4 * mv + c6
            if rhs < 0:
                continue
            w = int_sqrt(rhs)
            if w is not None:
                found.append((mv, w))
        start = stop + 1
    return found


def mordell_points(curve: MordellCurve, height_bound: int, denom_bound: int) -> list[SIntegralPoint]:
    """{3, 113}-integral points ``(m/v^2, l/v^3)`` with ``l >= 0``,
    ``1 <= m <= height_bound`` and ``v = 3^a 113^b``, ``a + b <= denom_bound``."""
    points = []
    if height_bound <= 0:
        return points
    for a, b in denominators(denom_bound):
        v = 3**a * 113**b
        c6 = curve.k * v**6
        # m^3 = l^2 - k v^6 > 0 puts m above the real cube root
        lo = max(1, icbrt_ceil(-c6))
        primes = [p for p, e in ((3, a), (113, b)) if e]
        for m, l in _cubic_square_numerators(0, 0, c6, lo, height_bound, primes):
            points.append(SIntegralPoint(m, l, a, b))
    points.sort(key=SIntegralPoint.sort_key)
    return points


def quartic_points(curve: QuarticCurve, height_bound: int, denom_bound: int = DEFAULT_QUARTIC_BOUNDS[1]) -> list[SIntegralPoint]:
    """Points ``(B, A) = (b/w, a/w^2)`` with ``A >= 0``, ``1 <= |b| <= height_bound``."""
    points = []
    for a, b in denominators(denom_bound):
        w = 3**a * 113**b
        cw = curve.c * w**4
        lo = max(1, iroot(cw, 4))
        for bn in range(lo, height_bound + 1):
            if (a and bn % 3 == 0) or (b and bn % 113 == 0):
                continue
            rhs = bn**4 - cw
            if rhs < 0:
                continue
            an = int_sqrt(rhs)
            if an is not None:
                points.append(SIntegralPoint(-bn, an, a, b, 1, 2))
                points.append(SIntegralPoint(bn, an, a, b, 1, 2))
    points.sort(key=SIntegralPoint.sort_key)
    return points


def delta_cubic_points(curve: DeltaCubic, height_bound: int, denom3_bound: int) -> list[SIntegralPoint]:
    """Points ``(V, W) = (m/9^a, w/27^a)`` with ``W >= 0``, ``|m| <= height_bound``
    and ``a <= denom3_bound``."""
    c2, c4, c6 = curve.coefficients
    points = []
    if height_bound <= 0:
        return points
    for a in range(denom3_bound + 1):
        u = 3**a
        found = _cubic_square_numerators(
            c2 * u**2, c4 * u**4, c6 * u**6, -height_bound, height_bound, (3,) if a else ()
        )
        points.extend(SIntegralPoint(m, w, a, 0) for m, w in found)
    points.sort(key=SIntegralPoint.sort_key)
    return points


def verify_point(curve: Curve, point: SIntegralPoint) -> bool:
    """Recheck a point on its curve in exact rational arithmetic."""
    return curve.contains(point.x, point.y)


def search(curve: Curve, height_bound: int, denom_bound: int) -> list[SIntegralPoint]:
    if isinstance(curve, MordellCurve):
        return mordell_points(curve, height_bound, denom_bound)
    if isinstance(curve, QuarticCurve):
        return quartic_points(curve, height_bound, denom_bound)
    return delta_cubic_points(curve, height_bound, denom_bound)


def _search_packed(args):
    return search(*args)


def search_many(
    curves: Iterable[Curve], height_bound: int, denom_bound: int, jobs: int = 1
) -> list[tuple[Curve, list[SIntegralPoint]]]:
    """Search each curve; results come back in input order whatever ``jobs`` is."""
    curves = list(curves)
    tasks = [(c, height_bound, denom_bound) for c in curves]
    if jobs > 1 and len(curves) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_packed, tasks))
    else:
        results = [_search_packed(t) for t in tasks]
    return list(zip(curves, results))


# line format: "<curve-id> <xnum>/<xden> <ynum>/<yden>"

_LINE = re.compile(r"^(mordell\[\d,\d\]|quartic\[\d,\d\]|delta\[-?\d+\]) (-?\d+)/(\d+) (-?\d+)/(\d+)$")


def format_points(rows: Iterable[tuple[Curve, SIntegralPoint]]) -> str:
    return "".join(f"{curve.curve_id} {point}\n" for curve, point in rows)


def curve_from_id(curve_id: str) -> Curve:
    family, _, rest = curve_id.partition("[")
    args = [int(v) for v in rest.rstrip("]").split(",")]
    if family == "mordell":
        return MordellCurve(*args)
    if family == "quartic":
        return QuarticCurve(*args)
    if family == "delta":
        return DeltaCubic(*args)
    raise ValueError(f"unknown curve family {family!r}")


def parse_points(text: str) -> list[tuple[str, Fraction, Fraction]]:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        m = _LINE.match(line)
        if not m:
            raise ValueError(f"malformed point line: {line!r}")
        cid, xn, xd, yn, yd = m.groups()
        rows.append((cid, Fraction(int(xn), int(xd)), Fraction(int(yn), int(yd))))
    return rows

"""Lucas pairs from imaginary quadratic integers, their sequences and
primitive divisors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .arith import jacobi


class LucasPairError(ValueError):
    """The given data do not form a Lucas pair."""


class IndeterminateBeyondBound(Exception):
    """Trial division up to the bound left an unfactored cofactor.

    ``found`` holds the primitive divisors located below the bound; more may
    exist among the prime factors of ``cofactor``.
    """

    def __init__(self, found: frozenset, cofactor: int, bound: int):
        self.found = found
        self.cofactor = cofactor
        self.bound = bound
        super().__init__(
            f"cofactor {cofactor} of L_n has no prime factor <= {bound}; "
            f"primitive divisors beyond the bound are undetermined"
        )


def _is_squarefree(d: int) -> bool:
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class QuadraticInteger:
    """xi = (s + t*sqrt(-d)) / 2**half."""

    s: int
    t: int
    d: int
    half: bool = False

    def __post_init__(self):
        if self.d < 1 or not _is_squarefree(self.d):
            raise ValueError(f"d must be a positive squarefree integer, got {self.d}")
        if self.half:
            if (self.s - self.t) % 2:
                raise ValueError("half-integral basis requires s = t (mod 2)")
            if (self.s * self.s + self.d * self.t * self.t) % 4:
                raise ValueError(f"({self.s} + {self.t}*sqrt(-{self.d}))/2 is not integral")

    @property
    def denominator(self) -> int:
        return 2 if self.half else 1

    @property
    def norm(self) -> int:
        return (self.s * self.s + self.d * self.t * self.t) // self.denominator**2

    @property
    def trace(self) -> int:
        return 2 * self.s // self.denominator

    def conjugate(self) -> "QuadraticInteger":
        return QuadraticInteger(self.s, -self.t, self.d, self.half)

    def power_numerator(self, n: int) -> tuple[int, int]:
        """(u, v) with (s + t*sqrt(-d))**n = u + v*sqrt(-d); the true power is
        that divided by ``denominator**n``."""
        if n < 0:
            raise ValueError("negative powers are not supported")
        ru, rv = 1, 0
        bu, bv = self.s, self.t
        d = self.d
        while n:
            if n & 1:
                ru, rv = ru * bu - d * rv * bv, ru * bv + rv * bu
            bu, bv = bu * bu - d * bv * bv, 2 * bu * bv
            n >>= 1
        return ru, rv


@dataclass(frozen=True)
class LucasPair:
    P: int
    Q: int

    def __post_init__(self):
        if self.Q == 0:
            raise LucasPairError("Q = eta*conj(eta) must be non-zero")
        if math.gcd(self.P, self.Q) != 1:
            raise LucasPairError(f"gcd(P, Q) = gcd({self.P}, {self.Q}) != 1")
        # eta/conj(eta) is a root of unity exactly when P^2 is 0, Q, 2Q, 3Q or 4Q
        sq = self.P * self.P
        if self.P == 0 or sq in (self.Q, 2 * self.Q, 3 * self.Q, 4 * self.Q):
            raise LucasPairError(
                f"degenerate pair P={self.P}, Q={self.Q}: eta/conj(eta) is a root of unity"
            )

    @property
    def D(self) -> int:
        """(eta - conj(eta))**2."""
        return self.P * self.P - 4 * self.Q


def from_quadratic(xi: QuadraticInteger) -> LucasPair:
    return LucasPair(xi.trace, xi.norm)


def lucas_term(pair: LucasPair, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 0, 1
    if n == 0:
        return 0
    for _ in range(n - 1):
        prev, cur = cur, pair.P * cur - pair.Q * prev
    return cur


def lucas_terms(pair: LucasPair, n: int) -> list[int]:
    """[L_0, ..., L_n]."""
    out = [0, 1]
    for _ in range(n - 1):
        out.append(pair.P * out[-1] - pair.Q * out[-2])
    return out[: n + 1]


def lucas_term_direct(xi: QuadraticInteger, n: int) -> int:
    """(xi**n - conj(xi)**n) / (xi - conj(xi)) by exact exponentiation."""
    if xi.t == 0:
        raise ValueError("xi is rational; xi - conj(xi) vanishes")
    _, v = xi.power_numerator(n)
    # xi**n - conj**n = 2v*sqrt(-d)/den**n and xi - conj = 2t*sqrt(-d)/den
    divisor = xi.t * xi.denominator ** (n - 1) if n else xi.t
    q, r = divmod(v, divisor)
    if r:
        raise ArithmeticError("non-integral Lucas term; xi is not an algebraic integer")
    return q


def _primes_upto(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primitive_divisors(
    pair: LucasPair,
    n: int,
    candidates: Optional[Iterable[int]] = None,
    bound: Optional[int] = None,
) -> frozenset:
    """Primitive prime divisors of L_n.

    With ``candidates`` the answer is exact for exactly those primes and no
    factorization is attempted. With ``bound`` every prime up to ``bound`` is
    tried, and :class:`IndeterminateBeyondBound` is raised if L_n keeps a
    factor above the bound.
    """
    if n < 2:
        raise ValueError("primitive divisors are defined for n >= 2")
    if (candidates is None) == (bound is None):
        raise ValueError("give exactly one of candidates or bound")
    terms = lucas_terms(pair, n)
    target = abs(terms[n])
    primes = sorted(set(candidates)) if candidates is not None else _primes_upto(bound)
    found = set()
    for p in primes:
        if target == 0 or target % p:
            continue
        if pair.D % p == 0:
            continue
        if any(terms[i] % p == 0 for i in range(1, n)):
            continue
        found.add(p)
    if bound is not None and target:
        rest = target
        for p in primes:
            while rest % p == 0:
                rest //= p
        if rest > 1:
            raise IndeterminateBeyondBound(frozenset(found), rest, bound)
    return frozenset(found)


def congruence_holds(D: int, q: int, n: int) -> bool:
    """q = (D/q) (mod n), the residue condition on a primitive divisor q."""
    if D % q == 0:
        raise ValueError(f"not applicable: {q} divides (eta - conj(eta))^2 = {D}")
    return (q - jacobi(D, q)) % n == 0


def congruence_class(pair: LucasPair, q: int, n: int) -> bool:
    return congruence_holds(pair.D, q, n)

"""Coprime positive solutions of ``x^2 + 3^alpha 113^beta = y^n`` for n >= 3."""

from .equation import THEOREM_SOLUTIONS, Solution
from .oracle import SearchBudget, brute_force
from .sieve_high import normalize_exponent, primitive_divisor_sieve, sieve_table, solve_n7
from .sieve_n3 import solve_n3
from .sieve_n4 import solve_n4

__all__ = [
    "THEOREM_SOLUTIONS",
    "SearchBudget",
    "Solution",
    "brute_force",
    "normalize_exponent",
    "primitive_divisor_sieve",
    "sieve_table",
    "solve_n3",
    "solve_n4",
    "solve_n7",
]

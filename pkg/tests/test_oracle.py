import pytest

from lnsolve.equation import THEOREM_SOLUTIONS, Solution, check_identity
from lnsolve.oracle import SearchBudget, brute_force
from lnsolve.sieve_high import solve_n7
from lnsolve.sieve_n3 import solve_n3
from lnsolve.sieve_n4 import solve_n4


def test_budget_examples():
    assert set(brute_force(SearchBudget(20, 5))) == {
        Solution(2, 7, 3, 1, 1), Solution(10, 7, 3, 5, 0), Solution(46, 13, 3, 4, 0)
    }
    assert Solution(1232, 115, 3, 3, 1) in brute_force(SearchBudget(120, 3))
    assert brute_force(SearchBudget(2, 3)) == []


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(10, 2)


def test_emitted_tuples_reverify():
    for s in brute_force(SearchBudget(300, 9)):
        assert check_identity(*s.as_tuple())


def test_deterministic_order():
    sols = brute_force(SearchBudget(200, 6))
    assert [s.y for s in sols] == sorted(s.y for s in sols)


def test_magnitude_cap():
    # 3^5 = 243 precedes 3 * 113 = 339
    assert brute_force(SearchBudget(200, 6, magnitude_cap=7**3)) == [
        Solution(10, 7, 3, 5, 0), Solution(2, 7, 3, 1, 1)
    ]


def test_other_prime_pair():
    # 2^2 + 11^2 = 11^2 + 2^2 = 5^3
    found = brute_force(SearchBudget(10, 3), primes=(2, 11))
    assert {Solution(2, 5, 3, 0, 2, (2, 11)), Solution(11, 5, 3, 2, 0, (2, 11))} <= set(found)


def test_oracle_subset_of_theorem():
    assert set(brute_force(SearchBudget(500, 11))) <= THEOREM_SOLUTIONS


def test_oracle_agrees_with_branches_on_overlap():
    budget = SearchBudget(500, 11)
    oracle = set(brute_force(budget))
    branches = set(solve_n3()) | set(solve_n4()) | set(solve_n7())
    assert oracle == {s for s in branches if s.y <= budget.y_max and s.n <= budget.n_max}

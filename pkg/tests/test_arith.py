import pytest
from hypothesis import given, strategies as st

from lnsolve.arith import (
    SUnitDecomposition,
    iroot,
    is_perfect_power,
    int_sqrt,
    jacobi,
    s_decompose,
)


def euler_criterion(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def squares_mod(p):
    return {k * k % p for k in range(1, p)}


@pytest.mark.parametrize("n, root", [(4, 2), (0, 0), (2, None), (7**3 - 339, 2)])
def test_int_sqrt_examples(n, root):
    assert int_sqrt(n) == root


def test_int_sqrt_rejects_negative():
    with pytest.raises(ValueError):
        int_sqrt(-1)


@pytest.mark.parametrize("n, k, root", [(343, 3, 7), (1520875, 3, 115), (8, 4, None), (82375**3, 3, 82375)])
def test_is_perfect_power_examples(n, k, root):
    assert is_perfect_power(n, k) == root


@pytest.mark.parametrize("a, m, expected", [(-1, 113, 1), (3, 113, -1), (1, 113, 1)])
def test_jacobi_examples(a, m, expected):
    assert jacobi(a, m) == expected
    assert euler_criterion(a, m) == expected


def test_three_is_not_a_square_mod_113():
    assert 3 not in squares_mod(113)
    assert (-1) % 113 in squares_mod(113)


@pytest.mark.parametrize("m", [0, -3, 8])
def test_jacobi_rejects_bad_modulus(m):
    with pytest.raises(ValueError):
        jacobi(2, m)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 97, 113, 1009])
def test_jacobi_matches_euler_on_primes(p):
    for a in range(-2 * p, 2 * p):
        assert jacobi(a, p) == euler_criterion(a, p)


@pytest.mark.parametrize(
    "n, parts",
    [(2224179, (9, 1, 1)), (339, (1, 1, 1)), (7, (0, 0, 7)), (3**9 * 113, (9, 1, 1))],
)
def test_s_decompose_examples(n, parts):
    dec = s_decompose(n)
    assert (dec.exp3, dec.exp113, dec.cofactor) == parts


def test_s_decompose_rejects_zero():
    with pytest.raises(ValueError):
        s_decompose(0)


def test_decomposition_invariant_enforced():
    with pytest.raises(ValueError):
        SUnitDecomposition(0, 0, 6)


@given(st.integers(min_value=1, max_value=10**40))
def test_int_sqrt_squares(n):
    assert int_sqrt(n * n) == n
    assert int_sqrt(n * n + 1) is None


@given(st.integers(min_value=2, max_value=10**6), st.integers(min_value=2, max_value=12))
def test_perfect_power_roundtrip(b, k):
    assert is_perfect_power(b**k, k) == b
    assert is_perfect_power(b**k + 1, k) is None


@given(st.integers(min_value=0, max_value=10**60), st.integers(min_value=1, max_value=9))
def test_iroot_is_floor(n, k):
    r = iroot(n, k)
    assert r**k <= n < (r + 1) ** k


@given(
    st.integers(min_value=-10**9, max_value=10**9),
    st.integers(min_value=-10**9, max_value=10**9),
    st.integers(min_value=0, max_value=10**6).map(lambda v: 2 * v + 1),
)
def test_jacobi_multiplicative(a, b, m):
    assert jacobi(a * b, m) == jacobi(a, m) * jacobi(b, m)


@given(st.integers(min_value=1, max_value=10**12))
def test_s_decompose_reassembles(n):
    dec = s_decompose(n)
    assert dec.value == n
    assert dec.cofactor % 3 and dec.cofactor % 113

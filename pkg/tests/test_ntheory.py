from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from cyclolib.errors import (ArithmeticOverflowError, BudgetExhaustedError, InvalidModulusError,
                             NoPrimesInClassError, NotInvertibleError, ValidationError)
from cyclolib.ntheory import (INT64_MAX, Residue, checked_add, checked_mul, is_prime, mod_inverse, next_prime,
                              odd_prime_factors, odd_primes_between, residue_bar, smallest_prime_in_class,
                              totient)


def test_residue_bar_is_non_negative():
    assert residue_bar(-1, 7) == 6
    assert residue_bar(14, 7) == 0
    assert Residue.of(-8, 5).value == 2
    assert int(Residue.of(23, 5)) == 3


def test_residue_rejects_bad_input():
    with pytest.raises(ValidationError):
        Residue(5, 5)
    with pytest.raises(InvalidModulusError):
        Residue.of(3, 0)


def test_checked_arithmetic():
    assert checked_mul(2**31, 2**31) == 2**62
    assert checked_add(INT64_MAX - 1, 1) == INT64_MAX
    with pytest.raises(ArithmeticOverflowError):
        checked_mul(2**32, 2**31)
    with pytest.raises(ArithmeticOverflowError):
        checked_add(INT64_MAX, 1)
    with pytest.raises(OverflowError):
        checked_mul(-(2**40), 2**40)


def test_mod_inverse():
    assert mod_inverse(17, 7) == 5
    assert mod_inverse(2, 3) == 2
    with pytest.raises(InvalidModulusError):
        mod_inverse(3, 1)
    with pytest.raises(NotInvertibleError):
        mod_inverse(6, 9)
    # Input errors are also ValueErrors
    with pytest.raises(ValueError):
        mod_inverse(6, 9)


@given(st.integers(2, 10**6), st.integers(-10**9, 10**9))
def test_mod_inverse_inverts(m, a):
    assume(gcd(a, m) == 1)
    x = mod_inverse(a, m)
    assert 0 < x < m
    assert (a * x) % m == 1 % m


@given(st.integers(-10**12, 10**12), st.integers(1, 10**6))
def test_residue_bar_is_idempotent(n, m):
    once = residue_bar(n, m)
    assert residue_bar(once, m) == once
    assert 0 <= once < m


@given(st.integers(2, 10**6), st.data())
def test_mod_inverse_is_an_involution(m, data):
    a = data.draw(st.integers(1, m - 1))
    assume(gcd(a, m) == 1)
    assert mod_inverse(mod_inverse(a, m), m) == residue_bar(a, m)


def test_is_prime():
    assert not is_prime(1393)
    assert is_prime(2**61 - 1)
    assert is_prime(2)
    for n in (-7, 0, 1, 4, 561):
        assert not is_prime(n)


def test_smallest_prime_in_class():
    assert smallest_prime_in_class(1, 15, 5) == 31
    assert smallest_prime_in_class(2, 15, 5) == 17
    assert smallest_prime_in_class(7, 15, 5) == 7
    with pytest.raises(NoPrimesInClassError):
        smallest_prime_in_class(3, 15, 5)
    with pytest.raises(BudgetExhaustedError):
        smallest_prime_in_class(1, 15, 5, cap=20)
    with pytest.raises(ValidationError):
        smallest_prime_in_class(1, 15, 5, cap=5)


@settings(max_examples=50)
@given(st.integers(1, 200), st.integers(2, 300), st.integers(0, 1000))
def test_smallest_prime_in_class_is_first(rho, modulus, lower):
    assume(gcd(rho, modulus) == 1)
    s = smallest_prime_in_class(rho, modulus, lower)
    assert s > lower
    assert s % modulus == rho % modulus
    assert is_prime(s)
    assert not any(is_prime(t) for t in range(s - modulus, lower, -modulus))


def test_factor_helpers():
    assert odd_prime_factors(2 * 9 * 5 * 49) == [3, 5, 7]
    assert odd_prime_factors(64) == []
    assert totient(105) == 48
    assert odd_primes_between(3, 20) == [5, 7, 11, 13, 17, 19]
    assert odd_primes_between(1, 5) == [3, 5]
    assert next_prime(7) == 11
    assert next_prime(100) == 101

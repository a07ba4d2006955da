"""Integer primitives: residues, inverses, primality and primes in progressions."""

from dataclasses import dataclass
from math import gcd

import sympy

from cyclolib.errors import (ArithmeticOverflowError, BudgetExhaustedError, InvalidModulusError,
                             NoPrimesInClassError, NotInvertibleError, ValidationError)

INT64_MAX = 2**63 - 1

# Upper limit for prime-in-class scans
DEFAULT_CAP = 10**8


@dataclass(frozen=True)
class Residue:
    """Canonical representative of an integer modulo a positive modulus."""
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidModulusError('modulus must be positive, got {}'.format(self.modulus))
        if not 0 <= self.value < self.modulus:
            raise ValidationError('{} is not reduced modulo {}'.format(self.value, self.modulus))

    @classmethod
    def of(cls, n, modulus):
        if modulus < 1:
            raise InvalidModulusError('modulus must be positive, got {}'.format(modulus))
        return cls(n % modulus, modulus)

    def __int__(self):
        return self.value


def residue_bar(n: int, modulus: int) -> int:
    """Return the representative of n in [0, modulus)."""
    return Residue.of(n, modulus).value


def checked_mul(a: int, b: int) -> int:
    """Multiply, refusing results outside the signed 64-bit range."""
    product = a * b
    if abs(product) > INT64_MAX:
        raise ArithmeticOverflowError('{} * {} overflows 64 bits'.format(a, b))
    return product


def checked_add(a: int, b: int) -> int:
    """Add, refusing results outside the signed 64-bit range."""
    total = a + b
    if abs(total) > INT64_MAX:
        raise ArithmeticOverflowError('{} + {} overflows 64 bits'.format(a, b))
    return total


def mod_inverse(a: int, m: int) -> int:
    """Return the inverse of a modulo m, in (0, m)."""
    if m < 2:
        raise InvalidModulusError('modulus must be at least 2, got {}'.format(m))
    if gcd(a, m) != 1:
        raise NotInvertibleError('{} is not invertible modulo {}'.format(a, m))
    return int(sympy.mod_inverse(a, m))


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact on the whole 64-bit range."""
    if n < 2:
        return False
    return bool(sympy.isprime(n))


def smallest_prime_in_class(rho: int, modulus: int, lower: int, cap: int = DEFAULT_CAP) -> int:
    """Return the smallest prime s with lower < s <= cap and s = rho (mod modulus)."""
    if modulus < 1:
        raise InvalidModulusError('modulus must be positive, got {}'.format(modulus))
    if gcd(rho, modulus) != 1:
        raise NoPrimesInClassError('class {} mod {} holds no primes above its gcd'.format(rho, modulus))
    if cap <= lower:
        raise ValidationError('cap {} must exceed the lower limit {}'.format(cap, lower))

    # First candidate above lower in the class
    s = lower + 1 + (rho - lower - 1) % modulus

    while s <= cap:
        if sympy.isprime(s):
            return s
        s += modulus

    raise BudgetExhaustedError('no prime = {} (mod {}) in ({}, {}]; raise the cap'.format(
        rho % modulus, modulus, lower, cap))


def odd_prime_factors(n: int):
    """Distinct odd primes dividing n, ascending."""
    return [f for f in sympy.primefactors(n) if f != 2]


def totient(n: int) -> int:
    return int(sympy.totient(n))


def odd_primes_between(low: int, high: int):
    """Odd primes in the half-open interval (low, high]."""
    return [int(x) for x in sympy.primerange(max(low + 1, 3), high + 1)]


def next_prime(n: int) -> int:
    """Smallest prime above n."""
    return int(sympy.nextprime(n))

"""Ground-truth cyclotomic polynomials by exact integer polynomial arithmetic.

Nothing here is fast. Coefficients are kept in int64 numpy arrays and every
product or division step is guarded, so an intermediate that would leave the
64-bit range raises instead of wrapping.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from cyclolib.errors import ArithmeticOverflowError, ConsistencyError, TooLargeError, ValidationError
from cyclolib.ntheory import INT64_MAX, odd_prime_factors, totient

# Largest degree the oracle will build
DEFAULT_SIZE_LIMIT = 2**20


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Dense integer polynomial; coeffs[k] is the coefficient of x^k."""
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValidationError('coefficients must form a non-empty sequence')
        if arr[-1] == 0:
            raise ValidationError('leading coefficient is zero')
        arr.setflags(write=False)
        object.__setattr__(self, 'coeffs', arr)

    @property
    def degree(self):
        return self.coeffs.size - 1

    @property
    def height(self):
        """Largest absolute value of a coefficient."""
        return int(np.abs(self.coeffs).max())

    def coefficient(self, k):
        """Coefficient of x^k, zero outside [0, degree]."""
        if 0 <= k <= self.degree:
            return int(self.coeffs[k])
        return 0

    def is_monic(self):
        return self.coeffs[-1] == 1

    def is_palindromic(self):
        return bool(np.array_equal(self.coeffs, self.coeffs[::-1]))

    def nonzero_signs(self):
        """Signs of the nonzero coefficients by increasing exponent."""
        return [int(s) for s in np.sign(self.coeffs[self.coeffs != 0])]

    def substitute_power(self, k):
        """Return f(x^k)."""
        return CoefficientVector(_inflate(self.coeffs, k))

    def substitute_negative(self):
        """Return f(-x)."""
        return CoefficientVector(_negate_variable(self.coeffs))

    def tolist(self):
        return [int(c) for c in self.coeffs]

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, index):
        return self.coeffs[index]

    def __eq__(self, other):
        if not isinstance(other, CoefficientVector):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return 'CoefficientVector({})'.format(self.tolist())


def poly_mul(a, b):
    """Exact product of two integer coefficient arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)

    # Each output coefficient is a sum of at most min(len) products
    worst = int(np.abs(a).max()) * int(np.abs(b).max()) * min(a.size, b.size)
    if worst > INT64_MAX:
        raise ArithmeticOverflowError('polynomial product may exceed 64 bits')

    return np.convolve(a, b)


def poly_divexact(dividend, divisor):
    """Divide by a polynomial with leading coefficient +-1; the remainder must vanish."""
    rem = np.array(dividend, dtype=np.int64)
    divisor = np.asarray(divisor, dtype=np.int64)

    n = rem.size - 1
    k = divisor.size - 1
    lead = int(divisor[-1])
    if abs(lead) != 1:
        raise ValidationError('divisor must have leading coefficient +-1')
    if n < k:
        raise ConsistencyError('dividend of degree {} is shorter than divisor of degree {}'.format(n, k))

    body = divisor[:-1]
    norm = max(int(np.abs(body).max()), 1) if k else 1

    quotient = np.zeros(n - k + 1, dtype=np.int64)

    for s in range(n - k, -1, -1):
        c = int(rem[s + k]) * lead
        if c == 0:
            continue
        if abs(c) > INT64_MAX // norm:
            raise ArithmeticOverflowError('quotient coefficient {} at x^{} overflows'.format(c, s))
        # |rem| + |c| * norm must stay in int64 for every entry the step touches
        if k and int(np.abs(rem[s:s + k]).max()) > INT64_MAX - abs(c) * norm:
            raise ArithmeticOverflowError('remainder below x^{} overflows'.format(s + k))
        quotient[s] = c
        rem[s:s + k] -= c * body
        rem[s + k] = 0

    if rem[:k].any():
        raise ConsistencyError('division left a nonzero remainder')

    return quotient


def x_power_minus_one(n):
    """Coefficients of x^n - 1."""
    coeffs = np.zeros(n + 1, dtype=np.int64)
    coeffs[0] = -1
    coeffs[n] = 1
    return coeffs


def _inflate(coeffs, k):
    out = np.zeros((len(coeffs) - 1) * k + 1, dtype=np.int64)
    out[::k] = coeffs
    return out


def _negate_variable(coeffs):
    out = np.array(coeffs, dtype=np.int64)
    out[1::2] *= -1
    return out


@lru_cache(maxsize=512)
def _phi_coeffs(n):
    if n == 1:
        coeffs = np.array([-1, 1], dtype=np.int64)
    elif n == 2:
        coeffs = np.array([1, 1], dtype=np.int64)
    else:
        factors = sympy.factorint(n)
        repeated = sorted(f for f, e in factors.items() if e > 1)

        if repeated:
            # Phi_pn(x) = Phi_n(x^p) when p | n
            f = repeated[0]
            coeffs = _inflate(_phi_coeffs(n // f), f)
        elif n % 2 == 0:
            # Phi_2n(x) = Phi_n(-x) for odd n >= 3
            coeffs = _negate_variable(_phi_coeffs(n // 2))
        else:
            # x^n - 1 is the product of Phi_d over all d | n
            product = np.array([1], dtype=np.int64)
            for d in sympy.divisors(n)[:-1]:
                product = poly_mul(product, _phi_coeffs(d))
            coeffs = poly_divexact(x_power_minus_one(n), product)

    coeffs.setflags(write=False)
    return coeffs


def phi_dense(n, size_limit=DEFAULT_SIZE_LIMIT):
    """Return the coefficient vector of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValidationError('n must be positive, got {}'.format(n))

    degree = totient(n)
    if degree > size_limit:
        raise TooLargeError('Phi_{} has degree {}, above the limit {}'.format(n, degree, size_limit))

    return CoefficientVector(_phi_coeffs(n))


def reduce_radical(n):
    """Return (product of the distinct odd primes of n, their count)."""
    if n < 1:
        raise ValidationError('n must be positive, got {}'.format(n))

    primes = odd_prime_factors(n)
    core = 1
    for f in primes:
        core *= f

    return core, len(primes)


def height_oracle(n, size_limit=DEFAULT_SIZE_LIMIT):
    """A(n) by expanding the cyclotomic polynomial of the reduced core."""
    core, _ = reduce_radical(n)
    return phi_dense(core, size_limit).height

"""Closed-form coefficients of binary cyclotomic polynomials Phi_pq.

For odd primes p < q the nonzero coefficients of Phi_pq sit on two
rectangles of exponents:

    +1 at m = u p + v q          u in [0, p_q* - 1],  v in [0, q_p* - 1]
    -1 at m = u'p + v'q - pq     u' in [p_q*, q - 1], v' in [q_p*, p - 1]

where p_q* is the inverse of p mod q and q_p* the inverse of q mod p.
Only the four parameters are stored; membership is decided arithmetically.
"""

from dataclasses import dataclass

import numpy as np

from cyclolib.dense_oracle import CoefficientVector
from cyclolib.errors import ConsistencyError, OrderingError, ValidationError
from cyclolib.ntheory import is_prime, mod_inverse


@dataclass(frozen=True)
class BinarySupport:
    p: int
    q: int
    p_q_star: int
    q_p_star: int

    @property
    def phi(self):
        """Degree (p-1)(q-1) of Phi_pq."""
        return (self.p - 1) * (self.q - 1)

    @property
    def positive_count(self):
        return self.p_q_star * self.q_p_star

    @property
    def negative_count(self):
        return (self.q - self.p_q_star) * (self.p - self.q_p_star)

    def locate(self, m):
        """Return (u, v) with m = u p + v q and 0 <= v < p."""
        v = (m * self.q_p_star) % self.p
        return (m - v * self.q) // self.p, v


def binary_params(p, q):
    """Build the support of Phi_pq for odd primes p < q."""
    for x in (p, q):
        if x < 3 or not is_prime(x):
            raise ValidationError('{} is not an odd prime'.format(x))
    if p >= q:
        raise OrderingError('need p < q, got p={} q={}'.format(p, q))

    support = BinarySupport(p, q, mod_inverse(p, q), mod_inverse(q, p))

    # Both identities are exact; a failure means the inverses are wrong
    if support.phi != (support.p_q_star - 1) * p + (support.q_p_star - 1) * q:
        raise ConsistencyError('degree identity fails for ({}, {})'.format(p, q))
    if support.positive_count != support.negative_count + 1:
        raise ConsistencyError('term counts differ by more than one for ({}, {})'.format(p, q))

    return support


def lam_leung_coeff(s, m):
    """Coefficient of x^m in Phi_pq; zero outside [0, phi(pq)]."""
    if m < 0 or m > s.phi:
        return 0

    u, v = s.locate(m)

    if v < s.q_p_star:
        if 0 <= u < s.p_q_star:
            return 1
        return 0

    # m + pq = u'p + v'q with u' = u + q
    if s.p_q_star <= u + s.q <= s.q - 1:
        return -1
    return 0


def binary_vector(s):
    """Dense coefficient vector of Phi_pq."""
    m = np.arange(s.phi + 1, dtype=np.int64)
    v = (m * s.q_p_star) % s.p
    u = (m - v * s.q) // s.p

    positive = (v < s.q_p_star) & (u >= 0) & (u < s.p_q_star)
    negative = (v >= s.q_p_star) & (u + s.q >= s.p_q_star) & (u + s.q <= s.q - 1)

    return CoefficientVector(positive.astype(np.int64) - negative.astype(np.int64))


def rectangle_terms(s):
    """List the (u, v, m) triples of both rectangles, each ordered by (v, u)."""
    positive = [(u, v, u * s.p + v * s.q)
                for v in range(s.q_p_star) for u in range(s.p_q_star)]
    negative = [(u, v, u * s.p + v * s.q - s.p * s.q)
                for v in range(s.q_p_star, s.p) for u in range(s.p_q_star, s.q)]
    return positive, negative

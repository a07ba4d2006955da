"""Coefficients and heights of ternary cyclotomic polynomials Phi_pqr.

Every coefficient of Phi_pqr is a signed count of Phi_pq terms:

    c_i = sum of d_m * chi_{mr}(i)  over m with m r + p + q >= i + 1 + pq

and the height is the largest suffix sum |sum_{m >= j} d_m chi_{mr}(i)|
over i in [0, pq) and j in [1, phi(pq)]. The scan only sees r through
r mod pq, so its cost does not grow with r.
"""

from dataclasses import dataclass

import numpy as np

from cyclolib.binary_cyclotomic import BinarySupport, binary_params, binary_vector, lam_leung_coeff
from cyclolib.chi_map import ChiContext, chi, chi_array
from cyclolib.dense_oracle import DEFAULT_SIZE_LIMIT, CoefficientVector, poly_divexact
from cyclolib.errors import OrderingError, TooLargeError, ValidationError
from cyclolib.ntheory import checked_add, checked_mul, is_prime, mod_inverse

# Number of chi cells evaluated per block of the height scan
DEFAULT_BLOCK = 2**20


@dataclass(frozen=True)
class TripleParams:
    p: int
    q: int
    r: int
    pq: int
    phi_pq: int
    phi_pqr: int
    r_bar: int
    q_bar_p: int
    r_bar_p: int
    q_p_star: int
    r_p_star: int
    p_q_star: int
    support: BinarySupport
    chi_ctx: ChiContext


def triple_params(p, q, r):
    """Validate an odd prime triple p < q < r and derive its residues."""
    for x in (p, q, r):
        if x < 3 or not is_prime(x):
            raise ValidationError('{} is not an odd prime'.format(x))
    if not p < q < r:
        raise OrderingError('need p < q < r, got {}, {}, {}'.format(p, q, r))

    support = binary_params(p, q)

    return TripleParams(
        p=p, q=q, r=r,
        pq=p * q,
        phi_pq=(p - 1) * (q - 1),
        phi_pqr=(p - 1) * (q - 1) * (r - 1),
        r_bar=r % (p * q),
        q_bar_p=q % p,
        r_bar_p=r % p,
        q_p_star=support.q_p_star,
        r_p_star=mod_inverse(r % p, p),
        p_q_star=support.p_q_star,
        support=support,
        chi_ctx=ChiContext(p, q),
    )


def ternary_coeff(t, i):
    """Coefficient of x^i in Phi_pqr, one term of Phi_pq at a time."""
    if i < 0 or i > t.phi_pqr:
        return 0

    # Terms with m r below this never reach c_i
    threshold = i + 1 + t.pq - t.p - t.q

    total = 0
    for m in range(t.phi_pq + 1):
        d = lam_leung_coeff(t.support, m)
        if d == 0:
            continue
        mr = checked_mul(m, t.r)
        if mr < threshold:
            continue
        total += d * chi(t.chi_ctx, mr, i)

    return total


def ternary_vector(t, size_limit=DEFAULT_SIZE_LIMIT):
    """All coefficients of Phi_pqr; each Phi_pq term adds its chi pattern to a prefix."""
    if t.phi_pqr > size_limit:
        raise TooLargeError('Phi_{} has degree {} above the limit {}; '
                            'ask for single coefficients instead'.format(t.pq * t.r, t.phi_pqr, size_limit))

    exponents = np.arange(t.phi_pqr + 1, dtype=np.int64)
    coeffs = np.zeros(t.phi_pqr + 1, dtype=np.int64)
    d = binary_vector(t.support).coeffs

    for m in np.flatnonzero(d):
        mr = checked_mul(int(m), t.r)
        last = min(t.phi_pqr, checked_add(mr, t.p + t.q - 1 - t.pq))
        if last < 0:
            continue
        coeffs[:last + 1] += int(d[m]) * chi_array(t.chi_ctx, mr % t.pq, exponents[:last + 1])

    return CoefficientVector(coeffs)


def ternary_vector_quotient(t, size_limit=DEFAULT_SIZE_LIMIT):
    """Phi_pqr as the exact quotient Phi_pq(x^r) / Phi_pq(x)."""
    if t.phi_pqr > size_limit:
        raise TooLargeError('Phi_{} has degree {} above the limit {}'.format(t.pq * t.r, t.phi_pqr, size_limit))

    binary = binary_vector(t.support)
    return CoefficientVector(poly_divexact(binary.substitute_power(t.r).coeffs, binary.coeffs))


def partial_sum(t, i, j):
    """sum over m >= j of d_m chi_{mr}(i), for any integers i and j."""
    total = 0
    for m in range(max(j, 0), t.phi_pq + 1):
        d = lam_leung_coeff(t.support, m)
        if d:
            total += d * chi(t.chi_ctx, checked_mul(m, t.r), i)
    return total


def _suffix_block(ctx, d, residues, rows):
    chis = chi_array(ctx, residues[np.newaxis, :], rows[:, np.newaxis])
    terms = chis * d
    return np.cumsum(terms[:, ::-1], axis=1)[:, ::-1]


def suffix_sums(t, i_values):
    """Matrix S[k, j] = partial_sum(t, i_values[k], j) for j in [0, phi(pq)]."""
    d = binary_vector(t.support).coeffs
    m = np.arange(t.phi_pq + 1, dtype=np.int64)
    residues = (m * t.r_bar) % t.pq
    return _suffix_block(t.chi_ctx, d, residues, np.asarray(i_values, dtype=np.int64))


def _scan_max(ctx, d, residues, block):
    phi = d.size - 1
    rows = max(1, block // (phi + 1))

    best = 0
    for start in range(0, ctx.pq, rows):
        i_block = np.arange(start, min(start + rows, ctx.pq), dtype=np.int64)
        sums = _suffix_block(ctx, d, residues, i_block)
        best = max(best, int(np.abs(sums[:, 1:]).max()))

    return best


def height_fast(t, block=DEFAULT_BLOCK):
    """A(pqr) from the suffix-sum scan, without expanding Phi_pqr."""
    if not t.p < t.q < t.r:
        raise OrderingError('the scan needs p < q < r, got {}, {}, {}'.format(t.p, t.q, t.r))

    d = binary_vector(t.support).coeffs
    m = np.arange(t.phi_pq + 1, dtype=np.int64)

    # m r mod pq, computed from r mod pq so intermediates stay below pq^2
    residues = (m * t.r_bar) % t.pq

    return _scan_max(t.chi_ctx, d, residues, block)


def partial_sum_upper(t, swap_qr=False, block=DEFAULT_BLOCK):
    """Suffix-sum maximum, optionally with q and r exchanged.

    The swapped scan reads the terms of Phi_pr, builds the windows from
    (p, r) and multiplies exponents by q. It only bounds A(pqr) from above.
    """
    if not swap_qr:
        return height_fast(t, block)

    support = binary_params(t.p, t.r)
    ctx = ChiContext(t.p, t.r)
    d = binary_vector(support).coeffs
    m = np.arange(support.phi + 1, dtype=np.int64)
    residues = (m * (t.q % ctx.pq)) % ctx.pq

    return _scan_max(ctx, d, residues, block)

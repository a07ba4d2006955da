"""The window indicator chi_n(i) through which Phi_pq terms reach Phi_pqr.

chi_n(i) is +1 when i + 1 falls in the window (n + q, n + p + q] and -1 when
it falls in (n, n + p], both taken modulo pq; otherwise 0. The two windows
never overlap because p < q and pq > p + q.
"""

from dataclasses import dataclass

import numpy as np

from cyclolib.errors import OrderingError, ValidationError
from cyclolib.ntheory import is_prime, residue_bar


@dataclass(frozen=True)
class ChiContext:
    p: int
    q: int

    def __post_init__(self):
        for x in (self.p, self.q):
            if x < 3 or not is_prime(x):
                raise ValidationError('{} is not an odd prime'.format(x))
        if self.p >= self.q:
            raise OrderingError('need p < q, got p={} q={}'.format(self.p, self.q))

    @property
    def pq(self):
        return self.p * self.q


def _in_window(low, high, k):
    # k in the cyclic window (low, high], all three already reduced
    return (high >= k > low) or (k <= high < low) or (high < low < k)


def chi(ctx, n, i):
    """chi_n(i) by comparing reduced residues."""
    pq = ctx.pq
    k = residue_bar(i + 1, pq)

    if _in_window(residue_bar(n + ctx.q, pq), residue_bar(n + ctx.p + ctx.q, pq), k):
        return 1
    if _in_window(residue_bar(n, pq), residue_bar(n + ctx.p, pq), k):
        return -1
    return 0


def chi_reference(ctx, n, i):
    """chi_n(i) by searching for the shift s directly. Only for cross-checks."""
    p, q, pq = ctx.p, ctx.q, ctx.pq
    bound = (abs(n) + abs(i)) // pq + 2

    for s in range(-bound, bound + 1):
        if n + p + q >= i + 1 + s * pq > n + q:
            return 1
    for s in range(-bound, bound + 1):
        if n + p >= i + 1 + s * pq > n:
            return -1
    return 0


def _window_array(low, high, k):
    return (((high >= k) & (k > low))
            | ((k <= high) & (high < low))
            | ((high < low) & (low < k)))


def chi_array(ctx, n, i):
    """chi over broadcast integer arrays n and i, as int8."""
    pq = ctx.pq
    n = np.asarray(n, dtype=np.int64) % pq
    k = (np.asarray(i, dtype=np.int64) + 1) % pq

    plus = _window_array((n + ctx.q) % pq, (n + ctx.p + ctx.q) % pq, k)
    minus = _window_array(n, (n + ctx.p) % pq, k)

    return plus.astype(np.int8) - minus.astype(np.int8)

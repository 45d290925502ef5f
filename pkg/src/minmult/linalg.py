"""Exact matrix rank over Q and over prime fields.

Rank over F_p is plain row reduction (compiled kernel when available).  Rank
over Q is computed multi-modularly and is exact, not probabilistic: every
nonzero r-minor of an integer matrix is bounded in absolute value by the
product of the column norms (Hadamard), so once the product of the primes
used exceeds that bound, some prime sees each nonzero minor and the maximum
of the modular ranks equals the rational rank.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt, prod

import numpy as np

from . import _backend

_PRIME_CEILING = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, isqrt(n) + 1, 2))


@lru_cache(maxsize=None)
def large_prime(index: int) -> int:
    """The ``index``-th prime below 2**31, counting down."""
    if index == 0:
        candidate = _PRIME_CEILING - 1
    else:
        candidate = large_prime(index - 1) - 2
    while not is_prime(candidate):
        candidate -= 2
    return candidate


def as_matrix(rows, ncols: int | None = None) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(len(a), ncols or 0)
    return a


def rank_mod_p(a, p: int) -> int:
    a = as_matrix(a)
    if a.size == 0:
        return 0
    if not 2 <= p < _PRIME_CEILING or not is_prime(p):
        raise ValueError(f"modulus must be a prime below 2**31, got {p}")
    return _backend.rank_mod_p(a, p)


def _hadamard_square(a: np.ndarray) -> int:
    """Product of squared column norms, an upper bound for (any minor)**2."""
    if np.abs(a).max() <= 1:  # 0/±1 matrices: norms are nonzero counts
        return prod(max(1, int(s)) for s in np.count_nonzero(a, axis=0).tolist())
    return prod(max(1, int(s)) for s in (a.astype(object) ** 2).sum(axis=0))


def rank_rational(a) -> int:
    a = as_matrix(a)
    if a.size == 0:
        return 0
    full = min(a.shape)
    bound_sq = _hadamard_square(a)
    best = 0
    modulus = 1
    index = 0
    while modulus * modulus <= bound_sq:
        p = large_prime(index)
        best = max(best, _backend.rank_mod_p(a, p))
        if best == full:
            return best
        modulus *= p
        index += 1
    return best


def rank(a, characteristic: int = 0) -> int:
    """Exact rank of an integer matrix over Q (characteristic 0) or F_p."""
    if characteristic == 0:
        return rank_rational(a)
    return rank_mod_p(a, characteristic)

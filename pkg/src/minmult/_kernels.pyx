# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: modular row reduction and isomorphism-orbit sweeps.

Both functions have pure-Python twins in ``_kernels_py`` with identical
signatures and results; ``_backend`` picks one at import time.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline long long _modpow(long long base, long long exp, long long p):
    cdef long long result = 1
    base %= p
    while exp > 0:
        if exp & 1:
            result = (result * base) % p
        base = (base * base) % p
        exp >>= 1
    return result


def rank_mod_p(a, long long p):
    """Rank of the integer matrix ``a`` over F_p (p < 2**31)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = np.mod(np.asarray(a, dtype=np.int64), p)
    arr = np.ascontiguousarray(arr)
    cdef long long[:, ::1] w = arr
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t n = w.shape[1]
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef long long inv, f, x, tmp
    for col in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if w[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, n):
                tmp = w[r, j]
                w[r, j] = w[piv, j]
                w[piv, j] = tmp
        inv = _modpow(w[r, col], p - 2, p)
        for j in range(col, n):
            w[r, j] = (w[r, j] * inv) % p
        for i in range(r + 1, m):
            f = w[i, col]
            if f == 0:
                continue
            for j in range(col, n):
                x = (w[i, j] - f * w[r, j]) % p
                if x < 0:
                    x += p
                w[i, j] = x
        r += 1
    return r


def orbit_representatives(int m, images, cover):
    """Least element of every orbit of covering facet-sets.

    ``images[k, j]`` is the index of candidate facet ``j`` under the k-th
    vertex permutation; ``cover[v]`` is the bitmask of candidate facets that
    contain vertex ``v``.  Masks are scanned in increasing order, so the first
    unvisited covering mask of an orbit is its minimum.
    """
    cdef long long[:, ::1] img = np.ascontiguousarray(images, dtype=np.int64)
    cdef long long[::1] cov = np.ascontiguousarray(cover, dtype=np.int64)
    cdef Py_ssize_t nperm = img.shape[0]
    cdef Py_ssize_t nvert = cov.shape[0]
    cdef long long total = (<long long>1) << m
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen_arr = np.zeros(total, dtype=np.uint8)
    cdef unsigned char[::1] seen = seen_arr
    cdef long long mask, mm, image
    cdef Py_ssize_t k, j, v
    cdef bint ok
    reps = []
    mask = 1
    while mask < total:
        if not seen[mask]:
            ok = True
            for v in range(nvert):
                if (mask & cov[v]) == 0:
                    ok = False
                    break
            if ok:
                reps.append(mask)
                for k in range(nperm):
                    image = 0
                    mm = mask
                    j = 0
                    while mm:
                        if mm & 1:
                            image |= (<long long>1) << img[k, j]
                        mm >>= 1
                        j += 1
                    seen[image] = 1
        mask += 1
    return reps

"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations


def rank_mod_p(a, p: int) -> int:
    """Rank of the integer matrix ``a`` over F_p."""
    rows = [[int(x) % p for x in row] for row in (a.tolist() if hasattr(a, "tolist") else a)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        pivot_row = [(x * inv) % p for x in rows[r]]
        rows[r] = pivot_row
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                row = rows[i]
                rows[i] = [(row[j] - f * pivot_row[j]) % p for j in range(n)]
        r += 1
        if r == len(rows):
            break
    return r


def orbit_representatives(m: int, images, cover) -> list[int]:
    """Least element of every orbit of covering facet-sets (see ``_kernels``)."""
    images = images.tolist() if hasattr(images, "tolist") else images
    cover = [int(c) for c in cover]
    powers = [[1 << j for j in perm] for perm in images]
    seen = bytearray(1 << m)
    reps = []
    for mask in range(1, 1 << m):
        if seen[mask]:
            continue
        if not all(mask & c for c in cover):
            continue
        reps.append(mask)
        bits = [j for j in range(m) if mask >> j & 1]
        for pw in powers:
            seen[sum([pw[j] for j in bits])] = 1
    return reps

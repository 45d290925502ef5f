"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both implementations get identical inputs and must agree before any timing
is reported.
"""

from __future__ import annotations

import argparse
import itertools
import timeit

import numpy as np

from minmult import _kernels_py
from minmult.complex import _permute_mask, candidate_facets

try:
    from minmult import _kernels
except ImportError:  # pragma: no cover
    _kernels = None


def rank_inputs(rng: np.random.Generator):
    yield "rank 60x80 mod 32003", rng.integers(-3, 4, size=(60, 80)), 32003
    yield "rank 200x150 0/±1 mod 2", rng.integers(-1, 2, size=(200, 150)), 2
    yield "rank 120x120 mod 7", rng.integers(0, 7, size=(120, 120)), 7


def orbit_inputs():
    for n, dim in ((5, 1), (5, 2), (6, 1)):
        cands = candidate_facets(n, dim)
        index = {c: j for j, c in enumerate(cands)}
        images = np.array([[index[_permute_mask(c, p)] for c in cands] for p in itertools.permutations(range(n))],
                          dtype=np.int64)
        cover = np.array([sum(1 << j for j, c in enumerate(cands) if c >> v & 1) for v in range(n)],
                         dtype=np.int64)
        yield f"orbits n={n} dim={dim} ({len(cands)} candidates)", len(cands), images, cover


def bench(label, fast, slow, repeat):
    assert fast() == slow(), label
    t_fast = min(timeit.repeat(fast, number=1, repeat=repeat))
    t_slow = min(timeit.repeat(slow, number=1, repeat=repeat))
    print(f"{label:<44} compiled {t_fast * 1e3:9.2f} ms   python {t_slow * 1e3:9.2f} ms   x{t_slow / t_fast:7.1f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    rng = np.random.default_rng(7)
    for label, a, p in rank_inputs(rng):
        bench(label, lambda: _kernels.rank_mod_p(a, p), lambda: _kernels_py.rank_mod_p(a, p), args.repeat)
    for label, m, images, cover in orbit_inputs():
        bench(label, lambda: list(_kernels.orbit_representatives(m, images, cover)),
              lambda: _kernels_py.orbit_representatives(m, images, cover), args.repeat)


if __name__ == "__main__":
    main()

import numpy as np
import pytest
import sympy
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, strategies as st

from minmult import _backend, _kernels_py
from minmult.linalg import is_prime, large_prime, rank, rank_rational

small_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=6))


@given(small_matrices)
def test_rank_over_rationals_matches_sympy(rows):
    assert rank_rational(np.array(rows, dtype=np.int64)) == sympy.Matrix(rows).rank()


@given(small_matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_sympy(rows, p):
    assert rank(np.array(rows, dtype=np.int64), p) == _sympy_rank_mod(rows, p)


def _sympy_rank_mod(rows, p):
    return DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p)).rank()


def test_rank_detects_characteristic_two():
    # the boundary of a triangle has rank 2 over Q and over F_2
    m = np.array([[1, 1, 0], [-1, 0, 1], [0, -1, -1]])
    assert rank(m, 0) == 2 and rank(m, 2) == 2
    assert rank(np.array([[1, 1], [1, -1]]), 2) == 1
    assert rank(np.array([[1, 1], [1, -1]]), 0) == 2


def test_large_primes_are_prime_and_distinct():
    ps = [large_prime(i) for i in range(4)]
    assert all(is_prime(p) for p in ps) and len(set(ps)) == 4
    assert not is_prime(1) and is_prime(2) and not is_prime(91)


@pytest.mark.skipif(_backend.BACKEND != "compiled", reason="compiled kernels not built")
@given(small_matrices, st.sampled_from([2, 3, 2147483647]))
def test_compiled_and_python_rank_agree(rows, p):
    a = np.array(rows, dtype=np.int64)
    assert _backend.rank_mod_p(a, p) == _kernels_py.rank_mod_p(a, p)


@pytest.mark.skipif(_backend.BACKEND != "compiled", reason="compiled kernels not built")
def test_compiled_and_python_orbits_agree():
    import itertools
    from minmult.complex import _permute_mask, candidate_facets
    cands = candidate_facets(5, 1)
    index = {c: j for j, c in enumerate(cands)}
    images = np.array([[index[_permute_mask(c, p)] for c in cands]
                       for p in itertools.permutations(range(5))], dtype=np.int64)
    cover = np.array([sum(1 << j for j, c in enumerate(cands) if c >> v & 1) for v in range(5)], dtype=np.int64)
    assert list(_backend.orbit_representatives(len(cands), images, cover)) == \
        _kernels_py.orbit_representatives(len(cands), images, cover)

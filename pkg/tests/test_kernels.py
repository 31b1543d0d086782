"""Compiled extension vs numpy fallback: identical results on random sectors."""

import numpy as np
import pytest
from scipy import sparse

from hnsim import _kernels
from hnsim._kernels import python_impl


def _random_amps(D, seed):
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=D) + 1j * rng.normal(size=D)
    return amps / np.linalg.norm(amps)


@pytest.mark.parametrize("L,N", [(4, 2), (5, 2), (6, 3), (8, 4), (9, 1), (10, 5)])
def test_enumeration_matches_fallback(L, N):
    a = _kernels.enumerate_states(L, N)
    b = python_impl.enumerate_states(L, N)
    assert np.array_equal(a, b)
    assert np.all(np.diff(a.astype(np.int64)) > 0)


@pytest.mark.parametrize("L,N,pbc", [(4, 2, True), (6, 3, True), (6, 3, False), (8, 4, True)])
def test_hamiltonian_matches_fallback(L, N, pbc):
    states = _kernels.enumerate_states(L, N)
    W = np.random.default_rng(0).normal(size=L)
    args = (states, L, 1.7, 0.43, 2.1, W, pbc)
    D = states.shape[0]
    A = sparse.coo_matrix((lambda r, c, v: (v, (r, c)))(*_kernels.hamiltonian_coo(*args)),
                          shape=(D, D)).toarray()
    B = sparse.coo_matrix((lambda r, c, v: (v, (r, c)))(*python_impl.hamiltonian_coo(*args)),
                          shape=(D, D)).toarray()
    assert np.allclose(A, B, atol=1e-14)


@pytest.mark.parametrize("L,N", [(4, 2), (6, 3), (8, 4)])
def test_opdm_and_annihilation_match_fallback(L, N):
    states = _kernels.enumerate_states(L, N)
    amps = _random_amps(states.shape[0], 3)
    assert np.allclose(_kernels.opdm(states, amps, L),
                       python_impl.opdm(states, amps, L), atol=1e-14)
    out_states = _kernels.enumerate_states(L, N - 1)
    for j in (0, L // 2, L - 1):
        assert np.allclose(_kernels.annihilate(states, amps, j, out_states),
                           python_impl.annihilate(states, amps, j, out_states))


def test_full_basis_kernels_agree():
    L = 6
    states = np.arange(1 << L, dtype=np.uint64)
    amps = _random_amps(states.shape[0], 9)
    assert np.allclose(_kernels.opdm(states, amps, L),
                       python_impl.opdm(states, amps, L), atol=1e-14)

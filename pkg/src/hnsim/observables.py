"""Real- and momentum-space densities, one-particle density matrix, and
correlation profiles, all as expectation values on the renormalized state.

The momentum grid is k_m = 2 pi m / L with m = -L//2 ... L-1-L//2, so the
asymptotic "k < 0 occupied" Fermi-sea structure is directly addressable;
n_k carries the 1/L mode normalization that makes sum_k n_k = N.
"""

import numpy as np

from . import _kernels
from .basis import FockBasis, ManyBodyVector, build_basis, momentum_grid


class OnePDM:
    """G[i,j] = <c_i^+ c_j>; Hermitian, trace N, eigenvalues in [0, 1]."""

    def __init__(self, matrix: np.ndarray):
        self.matrix = np.asarray(matrix, dtype=np.complex128)

    @property
    def L(self) -> int:
        return self.matrix.shape[0]


def density_real(psi: ManyBodyVector) -> np.ndarray:
    """n_j = sum_s |amp_s|^2 [site j occupied in s]."""
    occ = psi.basis.occupations().astype(np.float64)
    return (np.abs(psi.amplitudes) ** 2) @ occ


def one_particle_dm(psi: ManyBodyVector) -> OnePDM:
    return OnePDM(_kernels.opdm(psi.basis.states, psi.amplitudes, psi.basis.L))


def _annihilation_basis(basis: FockBasis) -> FockBasis:
    if basis.N is None:
        return basis  # the full basis is closed under annihilation
    return build_basis(basis.L, basis.N - 1)


def annihilate_site(psi: ManyBodyVector, j: int) -> ManyBodyVector:
    """c_j |psi> with the Jordan-Wigner sign, in the (N-1)-particle basis."""
    target = _annihilation_basis(psi.basis)
    out = _kernels.annihilate(psi.basis.states, psi.amplitudes, j, target.states)
    return ManyBodyVector(target, out)


def density_momentum(psi: ManyBodyVector) -> np.ndarray:
    """n_k = ||c_k psi||^2 with c_k = (1/sqrt L) sum_j e^{-ikj} c_j.

    Computed by actually applying the L annihilation maps (never forming the
    one-particle density matrix), which keeps this an independent code path
    from the OPDM route and guarantees n_k >= 0.
    """
    L = psi.basis.L
    if psi.basis.N == 0:
        return np.zeros(L)
    target = _annihilation_basis(psi.basis)
    A = np.empty((L, target.size), dtype=np.complex128)
    for j in range(L):
        A[j] = _kernels.annihilate(psi.basis.states, psi.amplitudes, j, target.states)
    ks = momentum_grid(L)
    phases = np.exp(-1j * ks[:, None] * np.arange(L)[None, :]) / np.sqrt(L)
    modes = phases @ A
    return np.einsum("ki,ki->k", modes.conj(), modes).real


def pdm_momentum_diagonal(pdm: OnePDM) -> np.ndarray:
    """n_k from the OPDM: (1/L) sum_{ij} e^{ik(i-j)} G_ij (cross-check path)."""
    L = pdm.L
    ks = momentum_grid(L)
    u = np.exp(-1j * ks[:, None] * np.arange(L)[None, :])  # u_k[i] = e^{-iki}
    return np.einsum("ki,ij,kj->k", u.conj(), pdm.matrix, u).real / L


def correlation_profile(pdm: OnePDM) -> np.ndarray:
    """Site-averaged |<c_j^+ c_{j+l}>| for l = 1..L-1 (ring distance)."""
    L = pdm.L
    out = np.empty(L - 1)
    for ell in range(1, L):
        idx = np.arange(L)
        out[ell - 1] = np.abs(pdm.matrix[idx, (idx + ell) % L]).mean()
    return out

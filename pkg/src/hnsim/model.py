"""Hatano-Nelson chain with interaction and quasiperiodic disorder.

Many-body Hamiltonian on a fixed-N (or full) Fock basis:

    H = -sum_j (Gamma_L c_j^+ c_{j+1} + Gamma_R c_{j+1}^+ c_j)
        + sum_j (V n_j n_{j+1} + W_j n_j),

Gamma_L = e^g Gamma_0, Gamma_R = e^-g Gamma_0, W_j = W cos(2 pi alpha j + theta).
Periodic boundaries identify c_L = c_0; open boundaries drop the wrap bond.
All matrix entries are real (g, V, W real); the matrix is symmetric iff g = 0.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .basis import FockBasis

GOLDEN_ALPHA = (np.sqrt(5.0) - 1.0) / 2.0

_HERMITIAN_TOL = 1e-14


@dataclass(frozen=True)
class ModelParams:
    L: int
    N: int
    gamma0: float = 1.0
    g: float = 0.0
    V: float = 0.0
    W: float = 0.0
    alpha: float = GOLDEN_ALPHA
    theta: float = 0.0
    boundary: str = "periodic"

    def __post_init__(self):
        if self.boundary not in ("periodic", "open"):
            raise ValueError(f"boundary must be 'periodic' or 'open', got {self.boundary!r}")

    @property
    def gamma_left(self) -> float:
        return np.exp(self.g) * self.gamma0

    @property
    def gamma_right(self) -> float:
        return np.exp(-self.g) * self.gamma0

    @property
    def periodic(self) -> bool:
        return self.boundary == "periodic"


@dataclass(frozen=True)
class SparseHamiltonian:
    """CSR matrix plus bookkeeping; immutable, safe for concurrent matvecs."""

    matrix: sparse.csr_matrix = field(repr=False)
    params: ModelParams
    hermitian: bool
    basis: FockBasis | None = None

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def dot(self, vec: np.ndarray) -> np.ndarray:
        return self.matrix.dot(vec)


def quasiperiodic_potential(W: float, alpha: float, theta: float, L: int) -> np.ndarray:
    """On-site energies W_j = W cos(2 pi alpha j + theta), j = 0..L-1."""
    j = np.arange(L)
    return W * np.cos(2.0 * np.pi * alpha * j + theta)


def build_hamiltonian(p: ModelParams, basis: FockBasis) -> SparseHamiltonian:
    """Assemble the many-body matrix on `basis` (kernel-backed)."""
    from . import _kernels

    if basis.L != p.L:
        raise ValueError(f"basis has L={basis.L}, params have L={p.L}")
    if basis.N is not None and basis.N != p.N:
        raise ValueError(f"basis has N={basis.N}, params have N={p.N}")
    W = quasiperiodic_potential(p.W, p.alpha, p.theta, p.L)
    rows, cols, vals = _kernels.hamiltonian_coo(
        basis.states, p.L, p.gamma_left, p.gamma_right, p.V, W, p.periodic
    )
    D = basis.size
    mat = sparse.coo_matrix((vals, (rows, cols)), shape=(D, D)).tocsr()
    mat.sum_duplicates()
    return SparseHamiltonian(matrix=mat, params=p, hermitian=abs(p.g) < 1e-15, basis=basis)


def single_particle_hamiltonian(p: ModelParams) -> np.ndarray:
    """Dense L x L one-particle matrix: H[j+1,j] = -Gamma_R, H[j,j+1] = -Gamma_L."""
    if p.L < 2:
        raise ValueError("need at least 2 sites")
    L = p.L
    H = np.zeros((L, L), dtype=np.complex128)
    W = quasiperiodic_potential(p.W, p.alpha, p.theta, L)
    np.fill_diagonal(H, W)
    for j in range(L - 1):
        H[j + 1, j] = -p.gamma_right
        H[j, j + 1] = -p.gamma_left
    if p.periodic:
        H[0, L - 1] += -p.gamma_right
        H[L - 1, 0] += -p.gamma_left
    return H


def dispersion(k, g: float, gamma0: float = 1.0):
    """Clean-ring eigenenergy eps_k = -2 Gamma_0 (cosh g cos k + i sinh g sin k)."""
    k = np.asarray(k, dtype=np.float64)
    eps = -2.0 * gamma0 * (np.cosh(g) * np.cos(k) + 1j * np.sinh(g) * np.sin(k))
    return complex(eps) if eps.ndim == 0 else eps

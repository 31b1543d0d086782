"""Fock-space enumeration and initial-state preparation.

Occupation patterns are unsigned integers with bit j = site j, listed in
ascending integer order.  A fixed-N sector holds binomial(L, N) patterns;
the "full" basis (all particle numbers, used for the mixed-filling initial
state) holds 2^L.
"""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import _kernels
from .errors import CapacityError

MAX_SITES = 24
MAX_SITES_FULL = 14


@dataclass(frozen=True)
class FockBasis:
    """Ordered fixed-particle-number (or full) occupation basis.

    Immutable after construction; safe to share across workers.
    `N is None` marks the full 2^L direct sum over all particle numbers.
    """

    L: int
    N: int | None
    states: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self.states.shape[0]

    def index_of(self, pattern: int) -> int:
        """Ordinal of an occupation pattern; raises KeyError if absent."""
        i = int(np.searchsorted(self.states, np.uint64(pattern)))
        if i >= self.size or self.states[i] != np.uint64(pattern):
            raise KeyError(f"pattern {pattern:#x} not in basis")
        return i

    def occupations(self) -> np.ndarray:
        """(size, L) array of 0/1 site occupations."""
        sites = np.arange(self.L, dtype=np.uint64)
        return ((self.states[:, None] >> sites[None, :]) & np.uint64(1)).astype(np.int8)


@dataclass
class ManyBodyVector:
    """Complex amplitude vector over a FockBasis (single-owner mutable)."""

    basis: FockBasis
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (self.basis.size,):
            raise ValueError("amplitude length does not match basis size")

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> "ManyBodyVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        self.amplitudes /= n
        return self

    def copy(self) -> "ManyBodyVector":
        return ManyBodyVector(self.basis, self.amplitudes.copy())


def build_basis(L: int, N: int) -> FockBasis:
    """Enumerate the C(L, N) patterns of N fermions on L sites."""
    if not isinstance(L, int) or not isinstance(N, int):
        raise TypeError("L and N must be integers")
    if L < 2:
        raise ValueError(f"need at least 2 sites, got L={L}")
    if L > MAX_SITES:
        raise CapacityError(f"L={L} exceeds the supported maximum {MAX_SITES}")
    if not 0 <= N <= L:
        raise ValueError(f"particle number N={N} outside 0..L={L}")
    states = _kernels.enumerate_states(L, N)
    assert states.shape[0] == comb(L, N)
    return FockBasis(L=L, N=N, states=states)


def full_basis(L: int) -> FockBasis:
    """All 2^L patterns (direct sum of every particle-number sector)."""
    if L < 2:
        raise ValueError(f"need at least 2 sites, got L={L}")
    if L > MAX_SITES_FULL:
        raise CapacityError(f"full basis limited to L<={MAX_SITES_FULL}, got L={L}")
    return FockBasis(L=L, N=None, states=np.arange(1 << L, dtype=np.uint64))


def density_wave_pattern(L: int) -> int:
    """Alternating occupation 1,0,1,0,... starting occupied at site 0."""
    return sum(1 << j for j in range(0, L, 2))


def prepare_density_wave(basis: FockBasis) -> ManyBodyVector:
    """Unit vector on the alternating density-wave pattern (site 0 occupied)."""
    if basis.N is None or basis.L % 2 != 0 or basis.N != basis.L // 2:
        raise ValueError("density wave requires an even-L, half-filled basis")
    amps = np.zeros(basis.size, dtype=np.complex128)
    amps[basis.index_of(density_wave_pattern(basis.L))] = 1.0
    return ManyBodyVector(basis, amps)


def momentum_grid(L: int) -> np.ndarray:
    """k_m = 2 pi m / L for m = -L//2 ... L-1-L//2 (so -pi <= k < pi)."""
    m = np.arange(-(L // 2), L - L // 2)
    return 2.0 * np.pi * m / L


def momentum_fock_state(basis: FockBasis, k_values: np.ndarray) -> ManyBodyVector:
    """Real-space amplitudes of prod_a c^+_{k_a} |0> on a fixed-N basis.

    Plane-wave orbitals (1/sqrt(L)) e^{ikj}; the amplitude on a site pattern
    with occupied sites j_1 < ... < j_Q is det[e^{i k_a j_b}] / L^{Q/2}.
    """
    L = basis.L
    Q = len(k_values)
    if basis.N != Q:
        raise ValueError("basis particle number must match len(k_values)")
    if Q == 0:
        return ManyBodyVector(basis, np.ones(1, dtype=np.complex128))
    occ = basis.occupations()
    sites = np.stack([np.flatnonzero(row) for row in occ])  # (D, Q)
    phases = np.exp(1j * np.asarray(k_values)[None, :, None] * sites[:, None, :])
    amps = np.linalg.det(phases) / L ** (Q / 2.0)
    return ManyBodyVector(basis, amps)


def prepare_mixed_filling(L: int, seed: int) -> ManyBodyVector:
    """Equal-weight superposition of one random momentum Fock state per filling.

    For each particle number Q = 0..L a Q-subset of the momentum grid is drawn
    uniformly (seeded), mapped to the real-space computational basis, and the
    L+1 sector states are summed with weight 1/sqrt(L+1) on the full basis.
    """
    basis = full_basis(L)
    rng = np.random.default_rng(seed)
    kgrid = momentum_grid(L)
    amps = np.zeros(basis.size, dtype=np.complex128)
    weight = 1.0 / np.sqrt(L + 1)
    for Q in range(L + 1):
        modes = np.sort(rng.choice(L, size=Q, replace=False))
        sector = build_basis(L, Q) if Q > 0 else build_basis(L, 0)
        vec = momentum_fock_state(sector, kgrid[modes])
        amps[sector.states.astype(np.int64)] += weight * vec.amplitudes
    return ManyBodyVector(basis, amps)

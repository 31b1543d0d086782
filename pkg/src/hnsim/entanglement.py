"""Bipartite entanglement entropy (natural log) of states and eigenstates.

Subsystem A is the contiguous block of sites 0..l-1.  Because the site
ordering puts all A operators before all B operators, the amplitude tensor
reshapes into a (patterns of A) x (patterns of B) matrix with no fermionic
reordering sign, and S is the Shannon entropy of its squared singular values.
"""

import numpy as np
from scipy.special import xlogy

from .basis import ManyBodyVector
from .spectral import SpectrumResult


def amplitude_matrix(psi: ManyBodyVector, ell: int) -> np.ndarray:
    """Scatter amplitudes into the (2^ell, 2^(L-ell)) bipartition matrix."""
    L = psi.basis.L
    if not 1 <= ell <= L - 1:
        raise ValueError(f"subsystem size ell={ell} outside 1..{L - 1}")
    states = psi.basis.states.astype(np.int64)
    rows = states & ((1 << ell) - 1)
    cols = states >> ell
    M = np.zeros((1 << ell, 1 << (L - ell)), dtype=np.complex128)
    M[rows, cols] = psi.amplitudes
    return M


def _shannon(p: np.ndarray) -> float:
    p = np.clip(p.real, 0.0, None)
    return float(-np.sum(xlogy(p, p)))


def entanglement_entropy(psi: ManyBodyVector, ell: int) -> float:
    """S = -sum sigma_i^2 ln sigma_i^2 from the Schmidt decomposition."""
    sv = np.linalg.svd(amplitude_matrix(psi, ell), compute_uv=False)
    return _shannon(sv**2)


def reduced_density_matrix(psi: ManyBodyVector, ell: int) -> np.ndarray:
    """Omega_A by explicitly tracing out B (independent of the SVD path)."""
    M = amplitude_matrix(psi, ell)
    return M @ M.conj().T


def entropy_from_rho(rho: np.ndarray) -> float:
    return _shannon(np.linalg.eigvalsh(rho))


class EntanglementCurve:
    """S(t) series with its summary statistics.

    S_max is the grid maximum attained at t0 (first time in case of ties);
    S_inf is the mean over the final decade of record times, with the sample
    standard deviation over that window as the error bar.
    """

    def __init__(self, times, S_values, ell):
        self.times = np.asarray(times, dtype=np.float64)
        self.S_values = np.asarray(S_values, dtype=np.float64)
        if self.times.shape != self.S_values.shape or self.times.size == 0:
            raise ValueError("times and S_values must be equal-length, nonempty")
        self.ell = int(ell)
        imax = int(np.argmax(self.S_values))
        self.S_max = float(self.S_values[imax])
        self.t0 = float(self.times[imax])
        window = self.times >= self.times[-1] / 10.0
        tail = self.S_values[window]
        self.S_inf = float(tail.mean())
        self.S_inf_err = float(tail.std(ddof=1)) if tail.size > 1 else 0.0


def entanglement_scan(traj, ell: int) -> EntanglementCurve:
    """Build the S(t) curve for one subsystem size from a trajectory record."""
    ells = traj.meta.get("ells")
    if "sent" in traj.data and ells and ell in ells:
        S = traj.data["sent"][:, list(ells).index(ell)]
    elif "state" in traj.data:
        S = np.array([entanglement_entropy(s, ell) for s in traj.data["state"]])
    else:
        raise ValueError(f"trajectory holds neither S(t) at ell={ell} nor states")
    return EntanglementCurve(traj.times, S, ell)


def eigenstate_entropy(spec: SpectrumResult, alpha: int, ell: int, variant: str = "RR",
                       zero_tol: float = 1e-12, return_info: bool = False):
    """Entanglement entropy of one eigenstate, in three flavors.

    RR and LL use the unit-normalized right/left vector through the Schmidt
    route and are real and non-negative.  RL traces the mixed outer product
    |alpha>><alpha| / <<alpha|alpha>, whose reduced matrix is generally
    non-Hermitian: eigenvalues may be complex or on the negative real axis,
    and -sum(lam ln lam) is evaluated with the principal logarithm after
    dropping |lam| < zero_tol.  The (possibly complex) value is returned
    as-is; `return_info` adds counts of dropped / negative-axis eigenvalues.
    """
    if spec.basis is None:
        raise ValueError("spectrum carries no basis; diagonalize a SparseHamiltonian")
    if variant in ("RR", "LL"):
        col = spec.right_vectors[:, alpha] if variant == "RR" else spec.left_vectors[:, alpha]
        nrm = np.linalg.norm(col)
        if nrm == 0.0:
            raise ValueError("eigenvector has zero norm")
        value = entanglement_entropy(ManyBodyVector(spec.basis, col / nrm), ell)
        return (value, {"dropped": 0, "negative_axis": 0}) if return_info else value
    if variant != "RL":
        raise ValueError(f"variant must be RR, LL or RL, got {variant!r}")
    right = ManyBodyVector(spec.basis, spec.right_vectors[:, alpha])
    left = ManyBodyVector(spec.basis, spec.left_vectors[:, alpha])
    overlap = np.vdot(left.amplitudes, right.amplitudes)  # <<a|a>>, 1 after pairing
    ML = amplitude_matrix(left, ell)
    MR = amplitude_matrix(right, ell)
    rho = (ML @ MR.conj().T) / overlap
    lam = np.linalg.eigvals(rho)
    keep = np.abs(lam) >= zero_tol
    lam = lam[keep]
    negative_axis = int(np.sum((lam.real < 0) & (np.abs(lam.imag) < zero_tol)))
    value = complex(-np.sum(lam * np.log(lam)))
    if return_info:
        return value, {"dropped": int((~keep).sum()), "negative_axis": negative_axis}
    return value

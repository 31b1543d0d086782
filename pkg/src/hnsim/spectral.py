"""Full biorthogonal diagonalization and complex-spectrum statistics.

Left and right eigenvectors come from a single LAPACK geev call, so pairs
share an index by construction; left vectors are rescaled so that
left^H right = identity.  Degenerate clusters get a block Gram correction,
and anything still violating biorthogonality is flagged rather than hidden.
"""

from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import CapacityError
from .model import SparseHamiltonian

DENSE_SPECTRUM_LIMIT = 13000
_FULL_RESIDUAL_LIMIT = 4096


class SpectrumResult(NamedTuple):
    eigenvalues: np.ndarray       # (D,)
    right_vectors: np.ndarray     # (D, D), columns
    left_vectors: np.ndarray      # (D, D), columns; left^H right = I
    biorthogonality_residual: float
    flagged: np.ndarray           # indices with residual overlap > 1e-8
    basis: object = None          # FockBasis when built from a SparseHamiltonian


def full_spectrum(H) -> SpectrumResult:
    """Right/left eigenpairs of H with biorthonormal rescaling."""
    if isinstance(H, SparseHamiltonian):
        if H.dimension > DENSE_SPECTRUM_LIMIT:
            raise CapacityError(
                f"dense spectrum limited to dimension {DENSE_SPECTRUM_LIMIT}, got {H.dimension}"
            )
        basis = getattr(H, "basis", None)
        A = H.dense()
        hermitian = H.hermitian
    else:
        basis = None
        A = np.asarray(H)
        hermitian = bool(
            np.allclose(A, A.conj().T, rtol=0.0, atol=1e-14 * max(1.0, np.abs(A).max()))
        )
    D = A.shape[0]
    if D > DENSE_SPECTRUM_LIMIT:
        raise CapacityError(f"dense spectrum limited to dimension {DENSE_SPECTRUM_LIMIT}, got {D}")

    if hermitian:
        w, V = np.linalg.eigh(A)
        return SpectrumResult(w.astype(np.complex128), V.astype(np.complex128),
                              V.astype(np.complex128), 0.0,
                              np.empty(0, dtype=np.int64), basis)

    w, VL, VR = scipy.linalg.eig(A, left=True, right=True)
    # per-pair rescale: <<a|a>> = VL[:,a]^H VR[:,a] -> 1
    s = np.einsum("ij,ij->j", VL.conj(), VR)
    tiny = np.abs(s) < 1e-13
    s = np.where(tiny, 1.0, s)
    VL = VL / s.conj()[None, :]
    _cluster_correct(w, VL, VR)
    residual, flagged = _biortho_residual(VL, VR)
    flagged = np.union1d(flagged, np.nonzero(tiny)[0])
    return SpectrumResult(w, VR, VL, residual, flagged, basis)


def _cluster_correct(w, VL, VR, rel_tol=1e-8):
    """Block Gram correction inside near-degenerate eigenvalue clusters."""
    radius = max(np.abs(w).max(), 1.0)
    tol = rel_tol * radius
    order = np.lexsort((w.imag, w.real))
    start = 0
    ws = w[order]
    for i in range(1, len(order) + 1):
        if i == len(order) or abs(ws[i] - ws[i - 1]) > tol:
            if i - start > 1:
                idx = order[start:i]
                sub = np.abs(w[idx][:, None] - w[idx][None, :]) <= tol
                if sub.all():  # contiguous-in-sort block is a genuine cluster
                    O = VL[:, idx].conj().T @ VR[:, idx]
                    # a defective block has (near-)vanishing left-right overlaps:
                    # "repairing" it would blow the left vectors up by 1/overlap,
                    # so leave it to the residual scan instead
                    sv = np.linalg.svd(O, compute_uv=False)
                    if sv.min() > 1e-8 * max(1.0, sv.max()):
                        VL[:, idx] = VL[:, idx] @ np.linalg.inv(O).conj().T
            start = i


def _biortho_residual(VL, VR):
    D = VR.shape[0]
    if D <= _FULL_RESIDUAL_LIMIT:
        O = VL.conj().T @ VR
        R = np.abs(O - np.eye(D))
        per_state = R.max(axis=1)
    else:
        # spot check: every diagonal plus 64 random off-diagonal rows
        rng = np.random.default_rng(0)
        rows = rng.choice(D, size=min(64, D), replace=False)
        diag = np.abs(np.einsum("ij,ij->j", VL.conj(), VR) - 1.0)
        off = np.abs(VL[:, rows].conj().T @ VR - np.eye(D)[rows])
        per_state = diag
        per_state[rows] = np.maximum(per_state[rows], off.max(axis=1))
    flagged = np.nonzero(per_state > 1e-8)[0]
    return float(per_state.max()), flagged


def expansion_coefficients(spec: SpectrumResult, psi0) -> np.ndarray:
    """c_alpha = <<alpha|psi0>; warns when reconstruction is unreliable."""
    amps = psi0.amplitudes if hasattr(psi0, "amplitudes") else np.asarray(psi0)
    if amps.shape[0] != spec.right_vectors.shape[0]:
        raise ValueError("state dimension does not match spectrum")
    c = spec.left_vectors.conj().T @ amps
    if spec.biorthogonality_residual > 1e-8:
        import warnings

        err = np.linalg.norm(spec.right_vectors @ c - amps)
        warnings.warn(
            f"biorthogonality residual {spec.biorthogonality_residual:.2e}; "
            f"reconstruction error {err:.2e}",
            RuntimeWarning,
            stacklevel=2,
        )
    return c


def imag_fraction(spec, threshold: float = 1e-10) -> float:
    """Fraction of eigenvalues with |Im E| above threshold."""
    ev = spec.eigenvalues if isinstance(spec, SpectrumResult) else np.asarray(spec)
    return float(np.mean(np.abs(ev.imag) > threshold))


class ImagGapStats(NamedTuple):
    E_top: float        # max Im(E)
    E_tilde: float      # mean of the 2nd..5th largest Im(E)
    deltas: np.ndarray  # 2*(Im E_1 - Im E_nu), descending order, deltas[0] = 0


def imag_gap_stats(spec) -> ImagGapStats:
    """Collapse-rate statistics of the imaginary spectrum."""
    ev = spec.eigenvalues if isinstance(spec, SpectrumResult) else np.asarray(spec)
    if ev.shape[0] < 5:
        raise ValueError("need at least 5 eigenvalues")
    order = np.lexsort((-ev.real, -ev.imag))  # descending Im, ties by descending Re
    im = ev.imag[order]
    return ImagGapStats(float(im[0]), float(im[1:5].mean()), 2.0 * (im[0] - im))

"""Non-interacting fast path.

A Slater determinant stays a Slater determinant under quadratic (even
non-Hermitian) evolution, but its orbitals lose orthogonality; the exact
one-particle density matrix of the renormalized state is the Gram-corrected
projector C = Phi (Phi^H Phi)^-1 Phi^H.  Block eigenvalues of C give the
entanglement entropy through the binary-entropy sum, which this module
cross-checks against the many-body Schmidt route elsewhere.

Also here: the closed-form asymptotic correlation matrix of the half-filled
clean ring (with its 4 cosh(g) oscillation from the two-fold degenerate top
modes), single-particle wavepacket diagnostics, the sliding Gaussian trial
packet, and the second-order perturbative dispersion.
"""

import numpy as np
from scipy.special import xlogy

from .errors import NumericalError
from .model import GOLDEN_ALPHA

RANK_COND_LIMIT = 1e12


class OrbitalSet:
    """L x N matrix whose columns span an N-particle Slater determinant."""

    def __init__(self, phi: np.ndarray):
        self.phi = np.ascontiguousarray(phi, dtype=np.complex128)
        if self.phi.ndim != 2:
            raise ValueError("orbitals must be an (L, N) matrix")

    @property
    def L(self) -> int:
        return self.phi.shape[0]

    @property
    def N(self) -> int:
        return self.phi.shape[1]

    def gram_condition(self) -> float:
        return float(np.linalg.cond(self.phi.conj().T @ self.phi))


class CorrelationMatrix:
    """Subsystem block of <c_m^+ c_n>; Hermitian with spectrum in [0, 1]."""

    def __init__(self, C: np.ndarray):
        self.C = np.asarray(C, dtype=np.complex128)


def density_wave_orbitals(L: int) -> OrbitalSet:
    """Orbitals of the alternating pattern: unit vectors on even sites."""
    phi = np.zeros((L, L // 2), dtype=np.complex128)
    for col, site in enumerate(range(0, L, 2)):
        phi[site, col] = 1.0
    return OrbitalSet(phi)


def evolve_orbitals(H1: np.ndarray, phi0: OrbitalSet, t: float) -> OrbitalSet:
    """Propagate the determinant's orbitals by exp(-i H1 t).

    The state only depends on the column span, so the flow is substepped with
    a QR re-orthonormalization in between: under Im(eps) growth the raw
    columns all collapse onto the dominant mode within a few units of
    1/Delta_Im, while the span itself stays perfectly well conditioned.
    Returned columns are orthonormal (unit norm in particular); the overall
    determinant normalization lives in `correlation_matrix`.
    """
    H1 = np.asarray(H1, dtype=np.complex128)
    if phi0.N > 0 and np.linalg.cond(phi0.phi) > RANK_COND_LIMIT:
        raise NumericalError("initial orbital set is rank deficient")
    phi = np.linalg.qr(phi0.phi)[0]
    if t == 0.0:
        return OrbitalSet(phi0.phi.copy())
    try:
        w, R = np.linalg.eig(H1)
        cond = np.linalg.cond(R)
        if not np.isfinite(cond) or cond > 1e10:
            raise np.linalg.LinAlgError
        spread = float(w.imag.max() - w.imag.min())
        step = abs(t) if spread == 0.0 else min(abs(t), 10.0 / spread)
        nsub = max(1, int(np.ceil(abs(t) / step)))
        dt = t / nsub
        shift = max(w.imag.max() * dt, 0.0)
        prop = R @ (np.exp(-1j * w * dt - shift)[:, None] * np.linalg.inv(R))
        for _ in range(nsub):
            phi = np.linalg.qr(prop @ phi)[0]
    except np.linalg.LinAlgError:
        phi = _taylor_columns(H1, phi, t)
    if not np.all(np.isfinite(phi)):
        raise NumericalError("orbital propagation produced an invalid column")
    out = OrbitalSet(phi)
    if out.gram_condition() > RANK_COND_LIMIT:
        raise NumericalError(
            f"orbital set near rank deficiency (cond {out.gram_condition():.2e}); "
            "the Slater state is no longer representable at this precision"
        )
    return out


def _taylor_columns(H1, phi, t, max_step_radius=0.5):
    radius = np.linalg.norm(H1, ord=np.inf)
    nsub = max(1, int(np.ceil(abs(t) * radius / max_step_radius)))
    dt = t / nsub
    for _ in range(nsub):
        term = phi.copy()
        acc = phi.copy()
        for n in range(1, 60):
            term = (-1j * dt / n) * (H1 @ term)
            acc += term
            if np.linalg.norm(term) < 1e-16 * np.linalg.norm(acc):
                break
        phi = np.linalg.qr(acc)[0]
    return phi


def correlation_matrix(phi: OrbitalSet, ell: int) -> CorrelationMatrix:
    """First ell x ell block of C = Phi (Phi^H Phi)^-1 Phi^H."""
    if not 1 <= ell <= phi.L:
        raise ValueError(f"block size ell={ell} outside 1..{phi.L}")
    if phi.N == 0:
        return CorrelationMatrix(np.zeros((ell, ell), dtype=np.complex128))
    gram = phi.phi.conj().T @ phi.phi
    try:
        X = np.linalg.solve(gram, phi.phi.conj().T)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("Gram matrix inversion failed (rank-deficient orbitals)") from exc
    C = phi.phi @ X
    C = 0.5 * (C + C.conj().T)  # exact C is Hermitian; kill roundoff skew
    return CorrelationMatrix(C[:ell, :ell])


def ff_entropy(C: CorrelationMatrix) -> float:
    """Binary-entropy sum over correlation-matrix eigenvalues (nats)."""
    lam = np.linalg.eigvalsh(C.C)
    if lam.min() < -1e-8 or lam.max() > 1 + 1e-8:
        raise ValueError(f"correlation spectrum outside [0,1]: [{lam.min()}, {lam.max()}]")
    lam = np.clip(lam, 0.0, 1.0)
    return float(-np.sum(xlogy(lam, lam) + xlogy(1.0 - lam, 1.0 - lam)))


def asymptotic_corr_matrix(L: int, g: float, t: float) -> np.ndarray:
    """Late-time correlation matrix of the clean half-filled ring.

    Fermi-sea block over the strictly growing modes, a static half weight on
    the two neutral modes (k = 0 and k = -pi), and their cross term
    oscillating at frequency 4 cosh(g).
    """
    if L % 2 != 0:
        raise ValueError("needs even L (half filling)")
    if (L // 2) % 2 != 0:
        raise ValueError("degenerate-pair construction assumes even L/2")
    n = np.arange(L)
    dn = n[:, None] - n[None, :]
    core = np.array([-2.0 * np.pi * m / L for m in range(1, L // 2)])
    C = np.exp(1j * core[:, None, None] * dn[None, :, :]).sum(axis=0) / L
    C = C + (np.exp(-1j * np.pi * dn) + 1.0) / (2.0 * L)
    osc = np.exp(-4j * np.cosh(g) * t) * np.exp(1j * np.pi * n)[:, None] \
        + np.exp(4j * np.cosh(g) * t) * np.exp(-1j * np.pi * n)[None, :]
    C = C + ((-1.0) ** (L // 2)) * osc / (2.0 * L)
    return C


def lambda_pair(g: float, t, phase: float) -> tuple:
    """Analytic block eigenvalues 1/2 +- (1/2) sqrt[(sin(4 cosh(g) t + phase)+1)/2]."""
    root = 0.5 * np.sqrt((np.sin(4.0 * np.cosh(g) * np.asarray(t) + phase) + 1.0) / 2.0)
    return 0.5 + root, 0.5 - root


def fit_oscillation_phase(times, lam_upper, g: float) -> float:
    """Least-squares phase of the analytic upper eigenvalue branch."""
    times = np.asarray(times)
    lam_upper = np.asarray(lam_upper)
    grid = np.linspace(0.0, 2.0 * np.pi, 720, endpoint=False)
    sse = [np.sum((lambda_pair(g, times, ph)[0] - lam_upper) ** 2) for ph in grid]
    best = grid[int(np.argmin(sse))]
    fine = best + np.linspace(-grid[1], grid[1], 200)
    sse_f = [np.sum((lambda_pair(g, times, ph)[0] - lam_upper) ** 2) for ph in fine]
    return float(fine[int(np.argmin(sse_f))] % (2.0 * np.pi))


def wavepacket_observables(psi: np.ndarray):
    """(mean position, variance, |psi_k|^2) of a single-particle state.

    Moments are taken in a frame centered on the density maximum, so a packet
    straddling the periodic seam reports a physical center; feed successive
    centers to `unwrap_positions` for a continuous trajectory.
    """
    psi = np.asarray(psi)
    L = psi.shape[0]
    rho = np.abs(psi) ** 2
    rho = rho / rho.sum()
    jmax = int(np.argmax(rho))
    offset = (np.arange(L) - jmax + L // 2) % L - L // 2
    pos = jmax + offset
    mean_x = float(np.sum(rho * pos))
    variance = float(np.sum(rho * pos**2) - mean_x**2)
    ks = 2.0 * np.pi * (np.arange(L) - L // 2) / L
    phases = np.exp(-1j * ks[:, None] * np.arange(L)[None, :]) / np.sqrt(L)
    nk = np.abs(phases @ psi) ** 2
    return mean_x % L, variance, nk


def unwrap_positions(xs, L: int) -> np.ndarray:
    """Undo ring wrapping in a sequence of packet centers."""
    return np.unwrap(np.asarray(xs, dtype=np.float64), period=float(L))


def trial_wavepacket(j0: int, g: float, t: float, L: int) -> np.ndarray:
    """Sliding Gaussian: center j0 - 2 cosh(g) t, squared width 2 sinh(g) t."""
    if t <= 0 or g <= 0:
        raise ValueError("trial packet needs t > 0 and g > 0 (width 4 sinh(g) t)")
    center = (j0 - 2.0 * np.cosh(g) * t) % L
    delta = (np.arange(L) - center + L / 2.0) % L - L / 2.0
    psi = np.exp(-(delta**2) / (4.0 * np.sinh(g) * t))
    return psi / np.linalg.norm(psi)


def perturbative_dispersion(k, g: float, W: float, alpha: float = GOLDEN_ALPHA):
    """Second-order eigenenergy of the weakly modulated non-reciprocal ring.

    Large-g closed form; the modulation wavenumber alpha cancels out of this
    limit (kept in the signature for symmetry with the potential).  Note the
    free part equals -dispersion(k): this branch keeps the sign convention of
    the perturbative series, whose W=0 limit maps onto +-dispersion(k).
    """
    del alpha
    k = np.asarray(k, dtype=np.float64)
    re = 2.0 * np.cosh(g) * (1.0 + W**2 / (16.0 * np.cosh(g) ** 2)) * np.cos(k)
    im = 2.0 * np.sinh(g) * (1.0 - W**2 / (16.0 * np.sinh(g) ** 2)) * np.sin(k)
    out = re + 1j * im
    return complex(out) if out.ndim == 0 else out


def sliding_speed(g: float, W: float = 0.0) -> float:
    """Perturbative packet speed 2 cosh(g) (1 + W^2 / (16 cosh^2 g))."""
    return 2.0 * np.cosh(g) * (1.0 + W**2 / (16.0 * np.cosh(g) ** 2))

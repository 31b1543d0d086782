"""Non-unitary time evolution.

The production stepper projects exp(-i dt H) onto an M-dimensional Krylov
subspace built by the Arnoldi iteration (modified Gram-Schmidt with one
reorthogonalization pass) and renormalizes the state after every step;
eigenmode weights grow like e^{Im(E) t}, so renormalizing per step keeps
amplitudes in floating-point range without changing any observable.

``dense_propagate_oracle`` is the independent check: full biorthogonal
eigendecomposition, exact mode-by-mode phases, then one renormalization.
"""

import numpy as np
import scipy.linalg

from .basis import ManyBodyVector
from .errors import CapacityError, NumericalError
from .model import SparseHamiltonian

DENSE_ORACLE_LIMIT = 4096


class KrylovConfig:
    """Stepper knobs: dt in 1e-2..2e-1 and M in 10..25 are the working range."""

    def __init__(self, dt=0.05, M=15, breakdown_tol=1e-12, renorm_each_step=True):
        if dt <= 0:
            raise ValueError("dt must be positive")
        if M < 1:
            raise ValueError("Krylov dimension M must be >= 1")
        self.dt = float(dt)
        self.M = int(M)
        self.breakdown_tol = float(breakdown_tol)
        self.renorm_each_step = bool(renorm_each_step)


class TrajectoryRecord:
    """Time series of observables for one disorder sample."""

    def __init__(self, times, data, sample_id=None, meta=None):
        self.times = np.asarray(times, dtype=np.float64)
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("record times must be strictly increasing")
        self.data = data
        self.sample_id = sample_id
        self.meta = meta or {}


class RecordSpec:
    """What to record and when.

    observables: subset of {"nj", "nk", "sent", "corr", "state"};
    ells: subsystem sizes for the "sent" channel.
    """

    KNOWN = ("nj", "nk", "sent", "corr", "state")

    def __init__(self, times, observables=("nj", "nk", "sent", "corr"), ells=None):
        self.times = np.asarray(times, dtype=np.float64)
        if self.times.size == 0 or np.any(np.diff(self.times) <= 0) or self.times[0] < 0:
            raise ValueError("need a strictly increasing, nonnegative time grid")
        for name in observables:
            if name not in self.KNOWN:
                raise ValueError(f"unknown observable {name!r}")
        self.observables = tuple(observables)
        self.ells = tuple(ells) if ells is not None else None


def log_times(t_min, t_max, n):
    """Log-spaced record grid matching the usual log-time axes."""
    return np.geomspace(t_min, t_max, n)


def _expm_e1(A, cond_limit=1e10):
    """First column of exp(A) for a small dense A.

    Eigendecomposition when the eigenvector basis is well conditioned,
    otherwise scaling-and-squaring (scipy.linalg.expm).
    """
    e1 = np.zeros(A.shape[0], dtype=np.complex128)
    e1[0] = 1.0
    try:
        w, R = np.linalg.eig(A)
        cond = np.linalg.cond(R)
        if not np.isfinite(cond) or cond > cond_limit:
            raise np.linalg.LinAlgError
        return R @ (np.exp(w) * np.linalg.solve(R, e1))
    except np.linalg.LinAlgError:
        return scipy.linalg.expm(A) @ e1


def _arnoldi_apply(matvec, v, dt, M, breakdown_tol):
    """One Krylov step on a unit vector.

    Returns (unnormalized output, its norm, effective subspace size).
    """
    D = v.shape[0]
    m_max = min(M, D)
    V = np.empty((D, m_max + 1), dtype=np.complex128)
    Hm = np.zeros((m_max + 1, m_max), dtype=np.complex128)
    V[:, 0] = v
    m_eff = m_max
    for m in range(m_max):
        w = matvec(V[:, m])
        for j in range(m + 1):
            h = np.vdot(V[:, j], w)
            Hm[j, m] += h
            w -= h * V[:, j]
        for j in range(m + 1):  # one reorthogonalization pass
            c = np.vdot(V[:, j], w)
            Hm[j, m] += c
            w -= c * V[:, j]
        hnorm = np.linalg.norm(w)
        Hm[m + 1, m] = hnorm
        if hnorm < breakdown_tol:
            m_eff = m + 1  # happy breakdown: subspace is invariant
            break
        V[:, m + 1] = w / hnorm
    y = _expm_e1(-1j * dt * Hm[:m_eff, :m_eff])
    out = V[:, :m_eff] @ y
    if not np.all(np.isfinite(out)):
        raise NumericalError(
            "non-finite amplitudes in Krylov step; try a smaller dt or larger M"
        )
    return out, float(np.linalg.norm(y)), m_eff


def _as_matvec(H):
    if isinstance(H, SparseHamiltonian):
        return H.dot
    mat = np.asarray(H)
    return mat.dot


def arnoldi_step(H, psi: ManyBodyVector, cfg: KrylovConfig, dt=None) -> ManyBodyVector:
    """Advance by one step of dt (default cfg.dt) and renormalize."""
    step = cfg.dt if dt is None else float(dt)
    out, norm, _ = _arnoldi_apply(_as_matvec(H), psi.amplitudes, step, cfg.M, cfg.breakdown_tol)
    if norm == 0.0:
        raise NumericalError("state annihilated during Krylov step")
    return ManyBodyVector(psi.basis, out / norm)


def dense_propagate_oracle(H, psi0: ManyBodyVector, t: float, return_info=False):
    """Propagate by full biorthogonal eigendecomposition, then renormalize.

    Falls back to substepped scaled-Taylor propagation if the spectrum is too
    ill-conditioned to trust (near-defective); `return_info` reports which
    method produced the output.
    """
    from .spectral import full_spectrum

    A = H.dense() if isinstance(H, SparseHamiltonian) else np.asarray(H, dtype=np.complex128)
    D = A.shape[0]
    if D > DENSE_ORACLE_LIMIT:
        raise CapacityError(f"dense oracle limited to dimension {DENSE_ORACLE_LIMIT}, got {D}")
    info = {"method": "eigendecomposition"}
    try:
        spec = full_spectrum(A)
        if spec.biorthogonality_residual > 1e-6 or spec.flagged.size > 0:
            raise NumericalError("biorthogonal decomposition unreliable (near-defective)")
        c = spec.left_vectors.conj().T @ psi0.amplitudes
        # rescale per step of Im(E) spread to avoid overflow at large t
        shift = np.max(spec.eigenvalues.imag) * t
        weights = c * np.exp(-1j * spec.eigenvalues * t - shift)
        out = spec.right_vectors @ weights
        norm = np.linalg.norm(out)
        if norm == 0.0 or not np.all(np.isfinite(out)):
            raise NumericalError("eigendecomposition propagation produced invalid state")
        psi_t = out / norm
    except NumericalError:
        info["method"] = "taylor"
        psi_t = _taylor_propagate(A, psi0.amplitudes.copy(), t)
    result = ManyBodyVector(psi0.basis, psi_t)
    return (result, info) if return_info else result


def _taylor_propagate(A, v, t, max_step_radius=0.5, order_tol=1e-16):
    """Substepped Taylor series of exp(-iAt) v, renormalized per substep."""
    radius = np.linalg.norm(A, ord=np.inf)
    nsub = max(1, int(np.ceil(abs(t) * radius / max_step_radius)))
    dt = t / nsub
    for _ in range(nsub):
        term = v.copy()
        acc = v.copy()
        for n in range(1, 60):
            term = (-1j * dt / n) * (A @ term)
            acc += term
            if np.linalg.norm(term) < order_tol * np.linalg.norm(acc):
                break
        v = acc / np.linalg.norm(acc)
    return v


def evolve_trajectory(H, psi0: ManyBodyVector, t_max: float, cfg: KrylovConfig,
                      record: RecordSpec, sample_id=None) -> TrajectoryRecord:
    """Step psi0 to t_max, recording the requested observables.

    Steps land exactly on every record time (the final partial step is
    shortened).  `meta["norm_drift"]` accumulates |pre-renormalization
    norm - 1| per step; it measures integrator error only in the
    Hermitian limit, where the exact flow is norm-preserving.
    """
    from . import observables as obs
    from .entanglement import entanglement_entropy

    if record.times[-1] > t_max + 1e-12:
        raise ValueError("record times exceed t_max")
    ells = record.ells or (psi0.basis.L // 2,)
    matvec = _as_matvec(H)
    psi = psi0.copy().normalize()
    out = {name: [] for name in record.observables}
    drift = 0.0
    t_cur = 0.0
    for t_target in record.times:
        while t_cur < t_target - 1e-12:
            step = min(cfg.dt, t_target - t_cur)
            amps, norm, _ = _arnoldi_apply(matvec, psi.amplitudes, step, cfg.M, cfg.breakdown_tol)
            drift += abs(norm - 1.0)
            psi.amplitudes = amps / norm if cfg.renorm_each_step else amps
            t_cur += step
        if not cfg.renorm_each_step:
            psi.normalize()
        for name in record.observables:
            if name == "nj":
                out[name].append(obs.density_real(psi))
            elif name == "nk":
                out[name].append(obs.density_momentum(psi))
            elif name == "sent":
                out[name].append([entanglement_entropy(psi, ell) for ell in ells])
            elif name == "corr":
                out[name].append(obs.correlation_profile(obs.one_particle_dm(psi)))
            elif name == "state":
                out[name].append(psi.copy())
    data = {k: (v if k == "state" else np.asarray(v)) for k, v in out.items()}
    meta = {"norm_drift": drift, "ells": ells, "dt": cfg.dt, "M": cfg.M}
    return TrajectoryRecord(record.times, data, sample_id=sample_id, meta=meta)

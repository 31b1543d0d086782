"""Scaling and relaxation fits.

Entanglement scaling against the chord length of the subsystem (effective
central charge via linear least squares) and the one-parameter logistic fit
of mode-occupation relaxation rates.  Every result carries its residual RMS;
points are only excluded where the contract says so (chain-end subsystems).
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit

from .model import dispersion


@dataclass
class FitResult:
    params: dict
    covariance: np.ndarray | None
    residual_rms: float
    n_points: int
    points: list = field(default_factory=list)


def chord_length(ell: int, L: int) -> float:
    """Finite-ring substitute for the subsystem length: 2 L sin(pi ell / L)."""
    if not 1 <= ell <= L - 1:
        raise ValueError(f"subsystem size ell={ell} outside 1..{L - 1}")
    return 2.0 * L * np.sin(np.pi * ell / L)


def fit_ceff(S_of_ell, L: int, include_edges: bool = False) -> FitResult:
    """Least squares of S against (1/3) ln(chord length).

    ell = 1 and ell = L-1 carry the strongest lattice corrections and are
    dropped by default; pass include_edges=True to fit every point.
    """
    pts = [(int(ell), float(S)) for ell, S in S_of_ell]
    if not include_edges:
        pts = [(ell, S) for ell, S in pts if ell not in (1, L - 1)]
    if len({ell for ell, _ in pts}) < 3:
        raise ValueError("need at least 3 distinct subsystem sizes")
    ells = np.array([ell for ell, _ in pts])
    S = np.array([S for _, S in pts])
    x = np.log([chord_length(ell, L) for ell in ells]) / 3.0
    X = np.column_stack([x, np.ones_like(x)])
    coef, *_ = np.linalg.lstsq(X, S, rcond=None)
    resid = S - X @ coef
    rms = float(np.sqrt(np.mean(resid**2)))
    dof = max(len(pts) - 2, 1)
    try:
        cov = (resid @ resid / dof) * np.linalg.inv(X.T @ X)
    except np.linalg.LinAlgError:
        raise ValueError("degenerate design matrix (all chord lengths equal)")
    return FitResult(
        params={"c_eff": float(coef[0]), "const": float(coef[1])},
        covariance=cov,
        residual_rms=rms,
        n_points=len(pts),
        points=pts,
    )


def _logistic_sse(r: float, t: np.ndarray, n: np.ndarray) -> float:
    return float(np.sum((expit(r * t) - n) ** 2))


def fit_nk_relaxation(nk_series, k: float, g: float) -> FitResult:
    """One-parameter logistic n(t) = 1 / (1 + e^{-r t}) by golden section.

    Returns the rate r and its ratio to 2 |Im eps_k| (the mixed-filling
    curve gives 1, the half-filled quench 2).  Refuses saturated series:
    the rate is unidentifiable without points in the transition region.
    """
    pts = [(float(t), float(n)) for t, n in nk_series]
    t = np.array([p[0] for p in pts])
    n = np.array([p[1] for p in pts])
    in_transition = (n > 0.05) & (n < 0.95)
    if n.max() - n.min() < 0.05 or not np.any(in_transition):
        raise ValueError("series is saturated everywhere; no rate information")
    # coarse deterministic bracket over sign and magnitude
    grid = np.concatenate([-np.geomspace(1e-4, 1e3, 60)[::-1], np.geomspace(1e-4, 1e3, 60)])
    sse = np.array([_logistic_sse(r, t, n) for r in grid])
    i = int(np.argmin(sse))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    gr = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - gr * (b - a), a + gr * (b - a)
    for _ in range(200):
        if _logistic_sse(c, t, n) < _logistic_sse(d, t, n):
            b, d = d, c
            c = b - gr * (b - a)
        else:
            a, c = c, d
            d = a + gr * (b - a)
    r = float(0.5 * (a + b))
    rms = float(np.sqrt(_logistic_sse(r, t, n) / len(pts)))
    rate0 = 2.0 * abs(dispersion(k, g, 1.0).imag)
    ratio = abs(r) / rate0 if rate0 > 0 else np.inf
    return FitResult(
        params={"rate": r, "ratio": float(ratio)},
        covariance=None,
        residual_rms=rms,
        n_points=len(pts),
        points=pts,
    )

"""Mode-occupation relaxation against the closed-form curves.

The half-filled density-wave quench follows the doubled-rate logistic; a
mixed-filling superposition (ensemble averaged, as in the grand-canonical
derivation it mimics) tracks the bare-rate curve more closely over the
transition window.
"""

import numpy as np
import pytest

from hnsim.basis import (build_basis, full_basis, momentum_grid, prepare_density_wave,
                         prepare_mixed_filling)
from hnsim.evolve import KrylovConfig, RecordSpec, evolve_trajectory
from hnsim.fitting import fit_nk_relaxation
from hnsim.model import ModelParams, build_hamiltonian
from hnsim.theory import gge_nk

L, G = 12, 0.5
TIMES = np.array([0.25, 0.5, 0.75, 1.0])
CFG = KrylovConfig(dt=0.05, M=15)


@pytest.fixture(scope="module")
def dw_nk():
    b = build_basis(L, L // 2)
    H = build_hamiltonian(ModelParams(L=L, N=L // 2, g=G), b)
    rec = RecordSpec(times=TIMES, observables=("nk",))
    return evolve_trajectory(H, prepare_density_wave(b), TIMES[-1], CFG, rec).data["nk"]


@pytest.fixture(scope="module")
def mixed_nk_mean():
    bf = full_basis(L)
    H = build_hamiltonian(ModelParams(L=L, N=0, g=G), bf)
    rec = RecordSpec(times=TIMES, observables=("nk",))
    acc = np.zeros((len(TIMES), L))
    n_seeds = 40
    for seed in range(n_seeds):
        traj = evolve_trajectory(H, prepare_mixed_filling(L, seed), TIMES[-1], CFG, rec)
        acc += traj.data["nk"]
    return acc / n_seeds


def test_density_wave_matches_doubled_rate(dw_nk):
    ks = momentum_grid(L)
    fac2 = np.array([[gge_nk(k, G, t, 0.0, True) for k in ks] for t in TIMES])
    assert np.abs(dw_nk - fac2).max() < 1e-10


def test_mixed_filling_tracks_bare_rate_closer(dw_nk, mixed_nk_mean):
    ks = momentum_grid(L)
    inner = np.abs(np.sin(ks)) > 1e-9
    bare = np.array([[gge_nk(k, G, t, 0.0, False) for k in ks] for t in TIMES])
    dev_dw = np.abs(dw_nk - bare)[:, inner].mean()
    dev_mixed = np.abs(mixed_nk_mean - bare)[:, inner].mean()
    assert dev_mixed < dev_dw


def test_density_wave_fitted_rate_ratio_is_two(dw_nk):
    # longer series for the fit
    b = build_basis(L, L // 2)
    H = build_hamiltonian(ModelParams(L=L, N=L // 2, g=0.05), b)
    times = np.linspace(0.5, 40.0, 40)
    rec = RecordSpec(times=times, observables=("nk",))
    traj = evolve_trajectory(H, prepare_density_wave(b), times[-1],
                             KrylovConfig(dt=0.1, M=15), rec)
    ks = momentum_grid(L)
    ik = int(np.argmin(np.abs(ks + np.pi / 2)))
    fit = fit_nk_relaxation(list(zip(times, traj.data["nk"][:, ik])), ks[ik], 0.05)
    assert fit.params["ratio"] == pytest.approx(2.0, rel=0.05)

import numpy as np
import pytest

from hnsim.fitting import chord_length, fit_ceff, fit_nk_relaxation
from hnsim.model import dispersion
from hnsim.theory import gge_nk


def test_chord_values():
    assert chord_length(10, 20) == pytest.approx(40.0, abs=1e-12)
    assert chord_length(5, 20) == pytest.approx(28.2842712474619, abs=1e-10)
    for ell in range(1, 20):
        assert chord_length(ell, 20) == pytest.approx(chord_length(20 - ell, 20), abs=1e-10)
    with pytest.raises(ValueError):
        chord_length(0, 20)
    with pytest.raises(ValueError):
        chord_length(20, 20)


def test_fit_ceff_exact_synthetic():
    L = 16
    pairs = [(ell, np.log(chord_length(ell, L)) / 3.0 + 0.7) for ell in range(2, 15)]
    fit = fit_ceff(pairs, L)
    assert fit.params["c_eff"] == pytest.approx(1.0, abs=1e-12)
    assert fit.params["const"] == pytest.approx(0.7, abs=1e-12)
    assert fit.residual_rms < 1e-13


def test_fit_ceff_edge_exclusion():
    L = 12
    pairs = [(ell, np.log(chord_length(ell, L)) / 3.0) for ell in range(1, 12)]
    pairs[0] = (1, pairs[0][1] + 10.0)  # corrupt the edge point
    fit = fit_ceff(pairs, L)  # excluded by default
    assert fit.params["c_eff"] == pytest.approx(1.0, abs=1e-10)
    assert fit.n_points == 9
    fit_all = fit_ceff(pairs, L, include_edges=True)
    assert abs(fit_all.params["c_eff"] - 1.0) > 0.1


def test_fit_ceff_symmetry_and_shift_invariance():
    L = 16
    rng = np.random.default_rng(0)
    S = {ell: float(np.log(chord_length(ell, L)) / 3.0 + 0.02 * rng.normal())
         for ell in range(2, 15)}
    fit_a = fit_ceff(list(S.items()), L)
    relabeled = [(L - ell, val) for ell, val in S.items()]
    fit_b = fit_ceff(relabeled, L)
    assert fit_a.params["c_eff"] == pytest.approx(fit_b.params["c_eff"], abs=1e-10)
    shifted = [(ell, val + 5.0) for ell, val in S.items()]
    fit_c = fit_ceff(shifted, L)
    assert fit_c.params["c_eff"] == pytest.approx(fit_a.params["c_eff"], abs=1e-10)
    assert fit_c.params["const"] == pytest.approx(fit_a.params["const"] + 5.0, abs=1e-10)


def test_fit_ceff_needs_three_points():
    with pytest.raises(ValueError):
        fit_ceff([(2, 1.0), (3, 1.1)], 12)


def test_logistic_fit_factor2_selfconsistency():
    k, g = -np.pi / 2, 0.2
    ts = np.linspace(0.2, 12.0, 40)
    for factor2, expected in ((True, 2.0), (False, 1.0)):
        series = [(t, gge_nk(k, g, t, 0.0, factor2)) for t in ts]
        fit = fit_nk_relaxation(series, k, g)
        assert fit.params["ratio"] == pytest.approx(expected, rel=1e-3)
        assert fit.residual_rms < 1e-6


def test_logistic_fit_rejects_saturated_series():
    k, g = -np.pi / 2, 0.5
    ts = np.linspace(50.0, 80.0, 10)
    series = [(t, gge_nk(k, g, t, 0.0, True)) for t in ts]  # all ~1
    with pytest.raises(ValueError):
        fit_nk_relaxation(series, k, g)


def test_logistic_fit_decaying_mode():
    k, g = +np.pi / 2, 0.2  # Im(eps) < 0: occupation decays
    ts = np.linspace(0.2, 12.0, 40)
    series = [(t, gge_nk(k, g, t, 0.0, False)) for t in ts]
    fit = fit_nk_relaxation(series, k, g)
    assert fit.params["rate"] < 0
    assert fit.params["ratio"] == pytest.approx(1.0, rel=1e-3)
    assert abs(2.0 * abs(dispersion(k, g).imag) * fit.params["ratio"]
               - abs(fit.params["rate"])) < 1e-6

import numpy as np
import pytest

from hnsim.basis import momentum_grid
from hnsim.theory import _straddle_weight, entropy_density, gge_nk, qpp_entropy


def test_gge_initial_value():
    for k in (-2.0, -0.5, 0.3, 2.8):
        assert gge_nk(k, 0.5, 0.0) == pytest.approx(0.5, abs=1e-14)


def test_gge_long_time_limits():
    assert gge_nk(-1.0, 0.5, 200.0) == pytest.approx(1.0, abs=1e-12)
    assert gge_nk(+1.0, 0.5, 200.0) == pytest.approx(0.0, abs=1e-12)


def test_gge_factor2_doubles_rate():
    k, g, t = -0.9, 0.3, 1.3
    slow = gge_nk(k, g, t, 0.0, factor2=False)
    fast = gge_nk(k, g, 2.0 * t, 0.0, factor2=False)
    assert gge_nk(k, g, t, 0.0, factor2=True) == pytest.approx(fast, abs=1e-12)
    assert fast > slow


def test_gge_particle_hole_structure():
    ks = momentum_grid(12)
    n = gge_nk(ks, 0.5, 0.7)
    n_neg = gge_nk(-ks, 0.5, 0.7)
    assert np.allclose(n + n_neg, 1.0, atol=1e-12)


def test_gge_in_open_interval():
    ks = momentum_grid(16)
    for t in (0.1, 1.0, 10.0):
        n = gge_nk(ks, 0.5, t)
        assert np.all(n > 0.0) and np.all(n < 1.0)


def test_entropy_density_values():
    assert entropy_density(0.5) == pytest.approx(0.6931471805599453, abs=1e-14)
    assert entropy_density(0.0) == 0.0
    assert entropy_density(1.0) == 0.0
    for n in (0.1, 0.3, 0.42):
        assert entropy_density(n) == pytest.approx(entropy_density(1.0 - n), abs=1e-14)
    with pytest.raises(ValueError):
        entropy_density(1.2)
    with pytest.raises(ValueError):
        entropy_density(-0.1)


def test_qpp_zero_at_t0():
    assert qpp_entropy(16, 3, 0.5, 0.0) == 0.0


def test_qpp_subsystem_range():
    with pytest.raises(ValueError):
        qpp_entropy(16, 0, 0.5, 1.0)
    with pytest.raises(ValueError):
        qpp_entropy(16, 16, 0.5, 1.0)


def test_straddle_weight_saturation_plateau():
    # construction identity: inside the plateau band the weight is exactly ell/L,
    # so frozen-weight saturation is (ell/L) * sum_k s_k by construction
    L, ell = 16, 4
    xs = np.linspace(ell, L - ell, 20)
    assert np.allclose(_straddle_weight(xs, ell, L), ell / L, atol=1e-15)
    assert _straddle_weight(np.array([0.0]), ell, L)[0] == 0.0
    # symmetric under ell -> L - ell
    assert np.allclose(_straddle_weight(xs, ell, L), _straddle_weight(xs, L - ell, L))


def test_qpp_early_growth_collapses_in_t_cosh_g():
    # frozen weights: S depends on g only through t*cosh(g) at early times
    L, ell = 16, 3
    t = 0.1
    vals = [qpp_entropy(L, ell, g, t / np.cosh(g), time_dependent_weights=False)
            for g in (0.05, 0.3, 0.8)]
    assert np.ptp(vals) < 1e-12


def test_qpp_revivals_and_decay():
    L, ell, g = 16, 3, 0.5
    ts = np.linspace(0.01, 12.0, 600)
    frozen = np.array([qpp_entropy(L, ell, g, t, time_dependent_weights=False) for t in ts])
    imax = int(np.argmax(frozen))
    assert frozen[imax] > frozen[-1]  # dips after the first maximum: revival
    # fastest mode revives with period L / (2 max|v|)
    vmax = 2.0 * np.cosh(g)
    period = L / (2.0 * vmax)
    k_fast = -np.pi / 2
    x = lambda t: np.mod(2.0 * vmax * t, L)
    assert x(period) == pytest.approx(0.0, abs=1e-9)
    # with time-dependent weights everything decays to zero
    assert qpp_entropy(L, ell, g, 500.0, time_dependent_weights=True) < 1e-10


def test_qpp_frozen_stays_below_saturation():
    L, ell = 16, 4
    smax = (ell / L) * L * np.log(2.0)
    ts = np.linspace(0.0, 50.0, 300)
    vals = [qpp_entropy(L, ell, 0.5, t, time_dependent_weights=False) for t in ts]
    assert max(vals) <= smax + 1e-12

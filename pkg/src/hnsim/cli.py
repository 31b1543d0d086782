"""Experiment driver: config validation, disorder ensembles, orchestration,
and bit-stable CSV/JSON output.

Subcommands: evolve | spectrum | scan-entanglement | single-particle | qpp | fit.
Configs are JSON with strict key checking (unknown keys are errors).  A run is
reproducible from (config, base_seed): per-sample seeds are base_seed + index
and the sample order is fixed, so outputs are byte-identical across reruns
and across worker counts.

Exit codes: 0 success, 2 config error, 3 capacity error, 4 numerical failure.
"""

import argparse
import copy
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from pathlib import Path

import numpy as np

from . import KERNEL_BACKEND, __version__
from . import io as hio
from .basis import build_basis, momentum_grid, prepare_density_wave
from .entanglement import EntanglementCurve
from .errors import CapacityError, ConfigError, NumericalError
from .evolve import KrylovConfig, RecordSpec, evolve_trajectory, log_times, _arnoldi_apply
from .fitting import fit_ceff, fit_nk_relaxation
from .freefermion import (correlation_matrix, density_wave_orbitals, evolve_orbitals,
                          ff_entropy, unwrap_positions, wavepacket_observables)
from .model import (GOLDEN_ALPHA, ModelParams, build_hamiltonian,
                    single_particle_hamiltonian)
from .spectral import DENSE_SPECTRUM_LIMIT, full_spectrum, imag_fraction, imag_gap_stats
from .theory import entropy_density, gge_nk, qpp_entropy

_SCHEMA = {
    "model": {"L", "N", "gamma0", "g", "V", "W", "alpha", "theta", "boundary"},
    "run": {"dt", "M", "t_max", "time_grid"},
    "time_grid": {"kind", "t_min", "points"},
    "ensemble": {"n_samples", "base_seed", "theta_mode", "thetas"},
    "sweep": {"W_values", "L_values"},
    "scan": {"ells", "method"},
    "wavepacket": {"j0"},
    "qpp": {"ells", "time_dependent_weights", "factor2"},
    "output": {"dir"},
}
_TOP_KEYS = {"model", "run", "ensemble", "observables", "ells", "sweep", "scan",
             "wavepacket", "qpp", "output"}


def load_config(path):
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    validate_config(cfg)
    return cfg


def validate_config(cfg):
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    unknown = set(cfg) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for section, keys in _SCHEMA.items():
        block = cfg.get(section)
        if block is None:
            continue
        if section in ("observables", "ells"):
            continue
        if not isinstance(block, dict):
            raise ConfigError(f"section {section!r} must be an object")
        bad = set(block) - keys
        if bad:
            raise ConfigError(f"unknown keys in {section!r}: {sorted(bad)}")
    tg = (cfg.get("run") or {}).get("time_grid")
    if tg is not None:
        bad = set(tg) - _SCHEMA["time_grid"]
        if bad:
            raise ConfigError(f"unknown keys in run.time_grid: {sorted(bad)}")
    obs = cfg.get("observables")
    if obs is not None:
        bad = set(obs) - set(RecordSpec.KNOWN)
        if bad:
            raise ConfigError(f"unknown observables: {sorted(bad)}")
    if "model" not in cfg or "L" not in cfg["model"]:
        raise ConfigError("config needs model.L")


def model_from_config(cfg, theta, L=None, W=None, N=None):
    m = cfg["model"]
    L = int(L if L is not None else m["L"])
    if N is None:
        N = int(m.get("N", L // 2)) if L == int(m["L"]) else L // 2
    try:
        return ModelParams(
            L=L, N=N,
            gamma0=float(m.get("gamma0", 1.0)),
            g=float(m.get("g", 0.0)),
            V=float(m.get("V", 0.0)),
            W=float(W if W is not None else m.get("W", 0.0)),
            alpha=float(m.get("alpha", GOLDEN_ALPHA)),
            theta=float(theta),
            boundary=m.get("boundary", "periodic"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def time_grid(cfg):
    run = cfg.get("run", {})
    t_max = float(run.get("t_max", 100.0))
    tg = run.get("time_grid", {})
    kind = tg.get("kind", "log")
    points = int(tg.get("points", 60))
    t_min = float(tg.get("t_min", 0.1))
    if kind == "log":
        return log_times(t_min, t_max, points)
    if kind == "linear":
        return np.linspace(t_min, t_max, points)
    raise ConfigError(f"time_grid.kind must be 'log' or 'linear', got {kind!r}")


def krylov_from_config(cfg):
    run = cfg.get("run", {})
    return KrylovConfig(dt=float(run.get("dt", 0.05)), M=int(run.get("M", 15)))


def sample_plan(cfg, n_override=None, seed_override=None):
    ens = cfg.get("ensemble", {})
    base_seed = int(seed_override if seed_override is not None else ens.get("base_seed", 0))
    mode = ens.get("theta_mode", "sampled")
    if mode == "explicit":
        thetas = ens.get("thetas")
        if not thetas:
            raise ConfigError("theta_mode 'explicit' needs ensemble.thetas")
        plan = [(i, base_seed + i, float(th)) for i, th in enumerate(thetas)]
        if n_override is not None:
            plan = plan[: int(n_override)]
        return plan
    if mode != "sampled":
        raise ConfigError(f"theta_mode must be 'sampled' or 'explicit', got {mode!r}")
    n = int(n_override if n_override is not None else ens.get("n_samples", 1))
    plan = []
    for i in range(n):
        seed = base_seed + i
        theta = float(np.random.default_rng(seed).uniform(0.0, 2.0 * np.pi))
        plan.append((i, seed, theta))
    return plan


def _run_pool(worker, tasks, threads):
    if threads <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, tasks))


# ---------------------------------------------------------------- evolve

def _evolve_sample(task):
    cfg, idx, seed, theta = task
    params = model_from_config(cfg, theta)
    basis = build_basis(params.L, params.N)
    H = build_hamiltonian(params, basis)
    psi0 = prepare_density_wave(basis)
    times = time_grid(cfg)
    ells = cfg.get("ells") or [params.L // 2]
    observables = tuple(cfg.get("observables", ["nj", "nk", "sent", "corr"]))
    rec = RecordSpec(times=times, observables=observables, ells=ells)
    traj = evolve_trajectory(H, psi0, float(times[-1]), krylov_from_config(cfg), rec,
                             sample_id={"sample": idx, "seed": seed, "theta": theta})
    rows = []
    for it, t in enumerate(traj.times):
        for key in observables:
            if key == "state":
                continue
            vals = traj.data[key][it]
            if key == "sent":
                for j, ell in enumerate(ells):
                    rows.append((idx, t, "sent", ell, vals[j]))
            elif key == "corr":
                for ell in range(1, params.L):
                    rows.append((idx, t, "corr", ell, vals[ell - 1]))
            else:
                for j in range(params.L):
                    rows.append((idx, t, key, j, vals[j]))
    return idx, seed, theta, rows, traj.meta["norm_drift"]


def cmd_evolve(cfg, out_dir, threads):
    params = model_from_config(cfg, 0.0)
    if params.L % 2 or params.N != params.L // 2:
        raise ConfigError("evolve starts from the density wave: needs even L, N = L/2")
    plan = sample_plan(cfg)
    t0 = time.time()
    results = _run_pool(_evolve_sample, [(cfg, i, s, th) for i, s, th in plan], threads)
    results.sort(key=lambda r: r[0])
    sample_dir = out_dir / "samples"
    sample_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for idx, seed, theta, rows, drift in results:
        path = sample_dir / f"s{idx:03d}.csv"
        hio.write_long_csv(path, rows)
        files.append(path)
    averaged = hio.average_ensemble(files)
    observables = [k for k in cfg.get("observables", ["nj", "nk", "sent", "corr"])
                   if k != "state"]
    outputs = {}
    for key in observables:
        path = out_dir / f"{key}.csv"
        hio.write_averaged_csv(path, averaged, keys={key})
        outputs[key] = path.name
    hio.write_manifest(out_dir / "manifest.json", {
        "command": "evolve",
        "config": cfg,
        "versions": _versions(),
        "kernel_backend": KERNEL_BACKEND,
        "wall_time_s": time.time() - t0,
        "samples": [{"sample": i, "seed": s, "theta": th} for i, s, th in plan],
        "norm_drift": {f"s{idx:03d}": drift for idx, _, _, _, drift in results},
        "k_grid": momentum_grid(params.L),
        "outputs": outputs,
    })
    return 0


# ---------------------------------------------------------------- spectrum

def _spectrum_sample(task):
    cfg, L, W, idx, seed, theta = task
    N = L // 2
    dim = comb(L, N)
    if dim > DENSE_SPECTRUM_LIMIT:
        raise CapacityError(f"L={L} half filling: dimension {dim} over dense limit")
    params = model_from_config(cfg, theta, L=L, W=W, N=N)
    spec = full_spectrum(build_hamiltonian(params, build_basis(L, N)))
    stats = imag_gap_stats(spec)
    return idx, imag_fraction(spec), stats.E_top, stats.E_tilde


def cmd_spectrum(cfg, out_dir, threads):
    sweep = cfg.get("sweep") or {}
    W_values = sweep.get("W_values")
    if not W_values:
        raise ConfigError("spectrum needs sweep.W_values")
    L_values = sweep.get("L_values") or [cfg["model"]["L"]]
    plan = sample_plan(cfg)
    t0 = time.time()
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    for L in L_values:
        for W in W_values:
            tasks = [(cfg, int(L), float(W), i, s, th) for i, s, th in plan]
            res = _run_pool(_spectrum_sample, tasks, threads)
            res.sort(key=lambda r: r[0])
            f = np.array([r[1] for r in res])
            tops = np.array([r[2] for r in res])
            tils = np.array([r[3] for r in res])
            err = float(f.std(ddof=1) / np.sqrt(f.size)) if f.size > 1 else 0.0
            rows.append((float(W), int(L), float(f.mean()), err,
                         float(tops.mean()), float(tils.mean())))
    with open(out_dir / "fim.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["W", "L", "f_im_mean", "f_im_err", "E_top_mean", "E_tilde_mean"])
        for row in rows:
            w.writerow(["%.17g" % row[0], row[1]] + ["%.17g" % x for x in row[2:]])
    hio.write_manifest(out_dir / "manifest.json", {
        "command": "spectrum",
        "config": cfg,
        "versions": _versions(),
        "kernel_backend": KERNEL_BACKEND,
        "wall_time_s": time.time() - t0,
        "samples": [{"sample": i, "seed": s, "theta": th} for i, s, th in plan],
        "outputs": {"fim": "fim.csv"},
    })
    return 0


# ---------------------------------------------------- scan-entanglement

def _scan_sample(task):
    cfg, idx, seed, theta, ells, method = task
    params = model_from_config(cfg, theta)
    times = time_grid(cfg)
    rows = []
    if method == "ff":
        h1 = single_particle_hamiltonian(params)
        phi0 = density_wave_orbitals(params.L)
        S = np.empty((len(times), len(ells)))
        for it, t in enumerate(times):
            phi_t = evolve_orbitals(h1, phi0, float(t))
            for je, ell in enumerate(ells):
                S[it, je] = ff_entropy(correlation_matrix(phi_t, ell))
    else:
        basis = build_basis(params.L, params.N)
        H = build_hamiltonian(params, basis)
        rec = RecordSpec(times=times, observables=("sent",), ells=ells)
        traj = evolve_trajectory(H, prepare_density_wave(basis), float(times[-1]),
                                 krylov_from_config(cfg), rec)
        S = traj.data["sent"]
    for je, ell in enumerate(ells):
        curve = EntanglementCurve(times, S[:, je], ell)
        rows.append((idx, times[-1], "sinf", ell, curve.S_inf))
        rows.append((idx, times[-1], "smax", ell, curve.S_max))
        rows.append((idx, times[-1], "t0", ell, curve.t0))
    return idx, rows


def cmd_scan_entanglement(cfg, out_dir, threads):
    params = model_from_config(cfg, 0.0)
    scan = cfg.get("scan") or {}
    ells = scan.get("ells") or list(range(1, params.L))
    method = scan.get("method", "auto")
    if method == "auto":
        method = "ff" if params.V == 0.0 else "mb"
    if method not in ("ff", "mb"):
        raise ConfigError(f"scan.method must be auto|ff|mb, got {method!r}")
    if method == "ff" and params.V != 0.0:
        raise ConfigError("the free-fermion scan path requires V = 0")
    plan = sample_plan(cfg)
    t0 = time.time()
    tasks = [(cfg, i, s, th, ells, method) for i, s, th in plan]
    results = _run_pool(_scan_sample, tasks, threads)
    results.sort(key=lambda r: r[0])
    sample_dir = out_dir / "samples"
    sample_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for idx, rows in results:
        path = sample_dir / f"s{idx:03d}.csv"
        hio.write_long_csv(path, rows)
        files.append(path)
    averaged = hio.average_ensemble(files)
    hio.write_averaged_csv(out_dir / "sinf.csv", averaged, keys={"sinf"})
    hio.write_averaged_csv(out_dir / "smax.csv", averaged, keys={"smax", "t0"})
    hio.write_manifest(out_dir / "manifest.json", {
        "command": "scan-entanglement",
        "config": cfg,
        "method": method,
        "versions": _versions(),
        "kernel_backend": KERNEL_BACKEND,
        "wall_time_s": time.time() - t0,
        "samples": [{"sample": i, "seed": s, "theta": th} for i, s, th in plan],
        "outputs": {"sinf": "sinf.csv", "smax": "smax.csv"},
    })
    return 0


# ------------------------------------------------------ single-particle

def _wavepacket_sample(task):
    cfg, idx, seed, theta = task
    params = model_from_config(cfg, theta)
    L = params.L
    j0 = int((cfg.get("wavepacket") or {}).get("j0", L // 2))
    from scipy import sparse

    h1 = sparse.csr_matrix(single_particle_hamiltonian(params))
    kcfg = krylov_from_config(cfg)
    times = time_grid(cfg)
    psi = np.zeros(L, dtype=np.complex128)
    psi[j0] = 1.0
    rows = []
    t_cur = 0.0
    means = []
    for t in times:
        while t_cur < t - 1e-12:
            step = min(kcfg.dt, t - t_cur)
            psi, norm, _ = _arnoldi_apply(h1.dot, psi, step, kcfg.M, 1e-12)
            psi /= norm
            t_cur += step
        mean_x, var, nk = wavepacket_observables(psi)
        means.append(mean_x)
        rows.append((idx, t, "meanx", 0, mean_x))
        rows.append((idx, t, "var", 0, var))
        for m in range(L):
            rows.append((idx, t, "nk", m, nk[m]))
    for t, x in zip(times, unwrap_positions(means, L)):
        rows.append((idx, t, "meanx_unwrapped", 0, x))
    return idx, rows


def cmd_single_particle(cfg, out_dir, threads):
    plan = sample_plan(cfg)
    t0 = time.time()
    results = _run_pool(_wavepacket_sample, [(cfg, i, s, th) for i, s, th in plan], threads)
    results.sort(key=lambda r: r[0])
    sample_dir = out_dir / "samples"
    sample_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for idx, rows in results:
        path = sample_dir / f"s{idx:03d}.csv"
        hio.write_long_csv(path, rows)
        files.append(path)
    averaged = hio.average_ensemble(files)
    hio.write_averaged_csv(out_dir / "wavepacket.csv", averaged)
    hio.write_manifest(out_dir / "manifest.json", {
        "command": "single-particle",
        "config": cfg,
        "versions": _versions(),
        "kernel_backend": KERNEL_BACKEND,
        "wall_time_s": time.time() - t0,
        "samples": [{"sample": i, "seed": s, "theta": th} for i, s, th in plan],
        "outputs": {"wavepacket": "wavepacket.csv"},
    })
    return 0


# ---------------------------------------------------------------- qpp

def cmd_qpp(cfg, out_dir, threads):
    del threads
    params = model_from_config(cfg, 0.0)
    q = cfg.get("qpp") or {}
    ells = q.get("ells") or [params.L // 2]
    tdw = bool(q.get("time_dependent_weights", True))
    factor2 = bool(q.get("factor2", False))
    times = time_grid(cfg)
    ks = momentum_grid(params.L)
    rows = []
    t0 = time.time()
    for t in times:
        for ell in ells:
            rows.append((0, t, "sqpp", ell,
                         qpp_entropy(params.L, ell, params.g, float(t), tdw, factor2)))
        nk = gge_nk(ks, params.g, float(t), 0.0, factor2)
        for m in range(params.L):
            rows.append((0, t, "nk_gge", m, nk[m]))
            rows.append((0, t, "s_gge", m, entropy_density(nk[m])))
    out_dir.mkdir(parents=True, exist_ok=True)
    hio.write_long_csv(out_dir / "qpp.csv", rows)
    hio.write_manifest(out_dir / "manifest.json", {
        "command": "qpp",
        "config": cfg,
        "versions": _versions(),
        "wall_time_s": time.time() - t0,
        "outputs": {"qpp": "qpp.csv"},
    })
    return 0


# ---------------------------------------------------------------- fit

def cmd_fit(args, out_dir):
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.kind == "ceff":
        if args.L is None:
            raise ConfigError("fit --kind ceff needs --L")
        rows = hio.read_averaged_csv(args.input)
        pairs = [(index, mean) for (_, key, index, mean, _, _) in rows if key == "sinf"]
        if not pairs:
            raise ConfigError(f"{args.input}: no 'sinf' rows")
        fit = fit_ceff(pairs, args.L, include_edges=args.include_edges)
        path = out_dir / "fit_ceff.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["c_eff", "const", "residual_rms", "n_points"])
            w.writerow(["%.17g" % fit.params["c_eff"], "%.17g" % fit.params["const"],
                        "%.17g" % fit.residual_rms, fit.n_points])
        print(f"c_eff = {fit.params['c_eff']:.4f}  const = {fit.params['const']:.4f}  "
              f"rms = {fit.residual_rms:.2e}  ({fit.n_points} points) -> {path}")
        return 0
    if args.kind == "nk-rate":
        if args.L is None or args.g is None or args.k_index is None:
            raise ConfigError("fit --kind nk-rate needs --L, --g and --k-index")
        rows = hio.read_averaged_csv(args.input)
        series = [(t, mean) for (t, key, index, mean, _, _) in rows
                  if key == "nk" and index == args.k_index]
        if not series:
            raise ConfigError(f"{args.input}: no nk rows at index {args.k_index}")
        k = momentum_grid(args.L)[args.k_index]
        try:
            fit = fit_nk_relaxation(series, float(k), args.g)
        except ValueError as exc:
            raise NumericalError(str(exc)) from exc
        path = out_dir / "fit_nk.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "rate", "ratio", "residual_rms", "n_points"])
            w.writerow(["%.17g" % k, "%.17g" % fit.params["rate"],
                        "%.17g" % fit.params["ratio"], "%.17g" % fit.residual_rms,
                        fit.n_points])
        print(f"rate = {fit.params['rate']:.4f}  ratio vs 2|Im eps_k| = "
              f"{fit.params['ratio']:.3f}  rms = {fit.residual_rms:.2e} -> {path}")
        return 0
    if args.kind == "vg":
        rows = hio.read_averaged_csv(args.input)
        series = [(t, mean) for (t, key, index, mean, _, _) in rows
                  if key == "meanx_unwrapped"]
        series = [(t, x) for t, x in series
                  if (args.t_min is None or t >= args.t_min)
                  and (args.t_max is None or t <= args.t_max)]
        if len(series) < 2:
            raise ConfigError("need at least two points for a velocity fit")
        t = np.array([p[0] for p in series])
        x = np.array([p[1] for p in series])
        slope, intercept = np.polyfit(t, x, 1)
        resid = x - (slope * t + intercept)
        path = out_dir / "fit_vg.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["v_g", "intercept", "residual_rms", "n_points"])
            w.writerow(["%.17g" % slope, "%.17g" % intercept,
                        "%.17g" % float(np.sqrt(np.mean(resid**2))), len(series)])
        print(f"v_g = {slope:.4f} -> {path}")
        return 0
    raise ConfigError(f"unknown fit kind {args.kind!r}")


# ---------------------------------------------------------------- main

def _versions():
    import scipy

    return {
        "hnsim": __version__,
        "python": sys.version.split()[0],
        "numpy": np.__version__,
        "scipy": scipy.__version__,
    }


def _apply_overrides(cfg, sets):
    for item in sets or []:
        if "=" not in item:
            raise ConfigError(f"--set expects dotted.key=value, got {item!r}")
        key, _, raw = item.partition("=")
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        node = cfg
        parts = key.split(".")
        for p in parts[:-1]:
            node = node.setdefault(p, {})
            if not isinstance(node, dict):
                raise ConfigError(f"--set path {key!r} collides with a scalar")
        node[parts[-1]] = value
    validate_config(cfg)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hnsim",
        description="Non-unitary dynamics of the interacting Hatano-Nelson chain",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True, help="JSON config path")
        p.add_argument("--out", default=None, help="output directory (overrides config)")
        p.add_argument("--samples", type=int, default=None, help="override ensemble.n_samples")
        p.add_argument("--seed", type=int, default=None, help="override ensemble.base_seed")
        p.add_argument("--threads", type=int, default=1, help="worker pool size")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override a config key, e.g. --set model.W=3.0")

    for name in ("evolve", "spectrum", "scan-entanglement", "single-particle", "qpp"):
        common(sub.add_parser(name))

    fit = sub.add_parser("fit")
    fit.add_argument("--kind", required=True, choices=["ceff", "nk-rate", "vg"])
    fit.add_argument("--input", required=True)
    fit.add_argument("--out", default=".")
    fit.add_argument("--L", type=int, default=None)
    fit.add_argument("--g", type=float, default=None)
    fit.add_argument("--k-index", type=int, default=None)
    fit.add_argument("--t-min", type=float, default=None)
    fit.add_argument("--t-max", type=float, default=None)
    fit.add_argument("--include-edges", action="store_true",
                     help="keep ell = 1 and L-1 in the c_eff fit")
    return parser


_COMMANDS = {
    "evolve": cmd_evolve,
    "spectrum": cmd_spectrum,
    "scan-entanglement": cmd_scan_entanglement,
    "single-particle": cmd_single_particle,
    "qpp": cmd_qpp,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fit":
            return cmd_fit(args, Path(args.out))
        cfg = load_config(args.config)
        if args.samples is not None:
            cfg.setdefault("ensemble", {})["n_samples"] = args.samples
        if args.seed is not None:
            cfg.setdefault("ensemble", {})["base_seed"] = args.seed
        _apply_overrides(cfg, args.set)
        out_dir = Path(args.out or (cfg.get("output") or {}).get("dir", "out"))
        out_dir.mkdir(parents=True, exist_ok=True)
        return _COMMANDS[args.command](copy.deepcopy(cfg), out_dir, max(1, args.threads))
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())

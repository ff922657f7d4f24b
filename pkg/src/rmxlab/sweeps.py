"""Monte Carlo sweep driver: ensemble grids, Q-vs-t sweeps, statistics sweeps, CSV output.

All sweeps are deterministic for a fixed seed and independent of the worker
count: every (operator realization) work item owns a stream derived from
(seed, ensemble tag, realization index), and reductions run in index order.
"""

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import chaotic_maps, ensembles, pr_circuits
from .core import derive_stream, spectral_decompose
from .entanglement import meyer_wallach_q_columns, q_asymptotic_bound, q_cue_mean
from .spectral_stats import (
    cue_number_variance,
    eigenvector_amplitude_hist,
    matrix_element_hist,
    number_variance,
)

ENSEMBLE_KINDS = ("cue", "interpolating", "pr", "baker", "sawtooth", "harper")
STATS_FLAGS = ("q_sweep", "number_variance", "eigvec_hist", "matelem_hist", "asy_bound")

Q_SWEEP_HEADER = (
    "ensemble,param_name,param_value,n_qubits,n_dim,t,n_ops,n_states,mean_q,std_q,abs_diff_cue"
)
NUMBER_VARIANCE_HEADER = "ensemble,param_value,n_dim,L,sigma2,sigma2_cue"
HIST_HEADER = "ensemble,param_value,n_dim,bin_lo,bin_hi,density,reference_density"
ASY_BOUND_HEADER = "ensemble,param_value,n_dim,q_asy_bound"


class ConfigError(ValueError):
    """Invalid sweep configuration."""


@dataclass(frozen=True)
class EnsembleSpec:
    """One operator family: kind, dimension, and the swept parameter.

    param semantics by kind: interpolating -> delta, pr -> m (layer count),
    sawtooth -> upper kick bound (kicks resampled per realization),
    harper -> upper gamma bound (gamma resampled per realization on [1, hi]),
    cue/baker -> unused.
    """

    kind: str
    n_dim: int
    param_name: str = "none"
    param_value: float = 0.0

    def __post_init__(self):
        if self.kind not in ENSEMBLE_KINDS:
            raise ConfigError(f"unknown ensemble kind {self.kind!r}")
        if self.n_dim < 2:
            raise ConfigError("n_dim must be >= 2")
        if self.kind in ("pr",) and 2 ** int(math.log2(self.n_dim)) != self.n_dim:
            raise ConfigError("pr ensembles need a power-of-two dimension")
        if self.kind == "baker" and self.n_dim % 2 != 0:
            raise ConfigError("baker map needs even dimension")
        if self.kind == "interpolating" and not 0.0 <= self.param_value <= 1.0:
            raise ConfigError("interpolating delta must lie in [0, 1]")

    @property
    def tag(self):
        return f"{self.kind}:{self.param_name}={self.param_value:g}:N={self.n_dim}"


@dataclass(frozen=True)
class SweepConfig:
    ensembles: tuple
    t_max: int = 1
    n_operators: int = 20
    initial_states: tuple | str = "all_basis"
    seed: int = 0
    out_prefix: str = "out/sweep"
    stats_flags: tuple = ("q_sweep",)

    def __post_init__(self):
        if self.t_max < 1:
            raise ConfigError("t_max must be >= 1")
        if self.n_operators < 1:
            raise ConfigError("n_operators must be >= 1")
        for flag in self.stats_flags:
            if flag not in STATS_FLAGS:
                raise ConfigError(f"unknown stats flag {flag!r}")


@dataclass(frozen=True)
class SweepRow:
    ensemble: str
    param_name: str
    param_value: float
    n_qubits: int
    n_dim: int
    t: int
    n_ops: int
    n_states: int
    mean_q: float
    std_q: float
    abs_diff_cue: float


def sample_operator(spec, rng):
    """Draw one operator realization of the given ensemble."""
    if spec.kind == "cue":
        return ensembles.sample_cue(spec.n_dim, rng)
    if spec.kind == "interpolating":
        return ensembles.sample_interpolating(spec.n_dim, spec.param_value, rng)
    if spec.kind == "pr":
        n_qubits = int(math.log2(spec.n_dim))
        return pr_circuits.sample_pr_operator(n_qubits, int(spec.param_value), rng)
    if spec.kind == "baker":
        return chaotic_maps.baker_map(spec.n_dim)
    if spec.kind == "sawtooth":
        k = chaotic_maps.sample_sawtooth_kick(rng, k_max=spec.param_value or 5.0)
        return chaotic_maps.sawtooth_map(spec.n_dim, k)
    if spec.kind == "harper":
        gamma = chaotic_maps.sample_harper_gamma(rng, hi=spec.param_value or 6.0)
        return chaotic_maps.harper_map(spec.n_dim, gamma)
    raise ConfigError(f"unknown ensemble kind {spec.kind!r}")


def worker_count():
    env = os.environ.get("RMXLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _state_indices(config, n_dim):
    if config.initial_states == "all_basis":
        return np.arange(n_dim)
    idx = np.asarray(sorted(config.initial_states), dtype=int)
    if idx.size == 0 or idx[0] < 0 or idx[-1] >= n_dim:
        raise ConfigError(f"initial state indices out of range for N={n_dim}")
    return idx


def _q_trajectory(spec, seed, op_index, t_max, state_idx):
    """Q of U^t applied to the selected basis states, shape (t_max, n_states)."""
    rng = derive_stream(seed, (spec.kind, spec.param_name, op_index))
    u = sample_operator(spec, rng)
    power = np.eye(spec.n_dim, dtype=complex)
    out = np.empty((t_max, len(state_idx)))
    for t in range(t_max):
        power = u @ power
        out[t] = meyer_wallach_q_columns(power[:, state_idx])
    return out


def _q_sweep_worker(args):
    return _q_trajectory(*args)


def _parallel_map(fn, items):
    workers = worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def run_q_sweep(config):
    """Per-ensemble Q(t) averages over operators x initial basis states."""
    rows = []
    for spec in config.ensembles:
        state_idx = _state_indices(config, spec.n_dim)
        items = [
            (spec, config.seed, r, config.t_max, state_idx)
            for r in range(config.n_operators)
        ]
        trajectories = _parallel_map(_q_sweep_worker, items)
        stacked = np.stack(trajectories)  # (ops, t, states)
        n_qubits = int(math.log2(spec.n_dim)) if 2 ** int(math.log2(spec.n_dim)) == spec.n_dim else 0
        cue_ref = q_cue_mean(spec.n_dim)
        for t in range(config.t_max):
            values = stacked[:, t, :].ravel()
            mean_q = float(np.mean(values))
            rows.append(
                SweepRow(
                    ensemble=spec.kind,
                    param_name=spec.param_name,
                    param_value=spec.param_value,
                    n_qubits=n_qubits,
                    n_dim=spec.n_dim,
                    t=t + 1,
                    n_ops=config.n_operators,
                    n_states=len(state_idx),
                    mean_q=mean_q,
                    std_q=float(np.std(values)),
                    abs_diff_cue=abs(mean_q - cue_ref),
                )
            )
    return rows


def _sample_worker(args):
    spec, seed, op_index = args
    rng = derive_stream(seed, (spec.kind, spec.param_name, op_index))
    return sample_operator(spec, rng)


def run_stats_sweep(config):
    """Spectral/matrix statistics per ensemble; writes one CSV per enabled flag."""
    out_prefix = Path(config.out_prefix)
    out_prefix.parent.mkdir(parents=True, exist_ok=True)
    nv_rows, ev_rows, me_rows, asy_rows = [], [], [], []
    for spec in config.ensembles:
        items = [(spec, config.seed, r) for r in range(config.n_operators)]
        operators = _parallel_map(_sample_worker, items)
        need_spectra = any(
            f in config.stats_flags for f in ("number_variance", "eigvec_hist", "asy_bound")
        )
        spectra = [spectral_decompose(u) for u in operators] if need_spectra else []
        if "number_variance" in config.stats_flags:
            l_grid = np.geomspace(0.5, spec.n_dim / 4.0, 40)
            for l_value, sigma2 in number_variance(spectra, l_grid):
                nv_rows.append(
                    (spec.kind, spec.param_value, spec.n_dim, l_value, sigma2,
                     float(cue_number_variance(l_value)))
                )
        if "eigvec_hist" in config.stats_flags:
            ev_rows.extend(_hist_rows(spec, eigenvector_amplitude_hist(spectra)))
        if "matelem_hist" in config.stats_flags:
            me_rows.extend(_hist_rows(spec, matrix_element_hist(operators)))
        if "asy_bound" in config.stats_flags:
            bound = float(np.mean([q_asymptotic_bound(u) for u in operators]))
            asy_rows.append((spec.kind, spec.param_value, spec.n_dim, bound))
    written = {}
    if nv_rows:
        written["number_variance"] = _write_table(
            NUMBER_VARIANCE_HEADER, nv_rows, out_prefix.parent / f"{out_prefix.name}number_variance.csv"
        )
    if ev_rows:
        written["eigvec_hist"] = _write_table(
            HIST_HEADER, ev_rows, out_prefix.parent / f"{out_prefix.name}eigvec_hist.csv"
        )
    if me_rows:
        written["matelem_hist"] = _write_table(
            HIST_HEADER, me_rows, out_prefix.parent / f"{out_prefix.name}matelem_hist.csv"
        )
    if asy_rows:
        written["asy_bound"] = _write_table(
            ASY_BOUND_HEADER, asy_rows, out_prefix.parent / f"{out_prefix.name}asy_bound.csv"
        )
    return written


def _hist_rows(spec, hist):
    # Reference density is the bin-averaged unit-mean exponential.
    rows = []
    edges = hist.bin_edges
    for lo, hi, dens in zip(edges[:-1], edges[1:], hist.densities):
        ref = (np.exp(-lo) - np.exp(-hi)) / (hi - lo)
        rows.append((spec.kind, spec.param_value, spec.n_dim, float(lo), float(hi), float(dens), float(ref)))
    return rows


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _write_table(header, rows, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [header] + [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    return path


def write_csv(rows, path):
    """Write SweepRow records sorted by (ensemble, param_value, n_dim, t)."""
    ordered = sorted(rows, key=lambda r: (r.ensemble, r.param_value, r.n_dim, r.t))
    table = [
        (
            r.ensemble, r.param_name, r.param_value, r.n_qubits, r.n_dim, r.t,
            r.n_ops, r.n_states, r.mean_q, r.std_q, r.abs_diff_cue,
        )
        for r in ordered
    ]
    return _write_table(Q_SWEEP_HEADER, table, path)


# -- presets ---------------------------------------------------------------

_FIG1_DELTAS = (0.5, 0.8, 0.9, 0.94, 0.96, 0.98, 0.99, 0.999, 0.9999)
_FIG2_MS = (2, 4, 8, 16, 24, 32, 40)

PRESET_NAMES = ("fig1_left", "fig1_right", "fig2_left", "fig2_right", "fig3_stats", "fig3_chaotic")


def preset(name, seed=0, n_operators=None, out_prefix=None):
    """Ready-made sweep grids mirroring the reference figures at desk scale."""
    if name == "fig1_left":
        specs = tuple(
            EnsembleSpec("interpolating", 256, "delta", d) for d in _FIG1_DELTAS
        )
        cfg = SweepConfig(specs, t_max=20, n_operators=20, seed=seed, out_prefix=f"out/{name}_")
    elif name == "fig1_right":
        specs = tuple(EnsembleSpec("interpolating", n, "delta", 0.8) for n in (32, 64, 128, 256))
        cfg = SweepConfig(specs, t_max=20, n_operators=20, seed=seed, out_prefix=f"out/{name}_")
    elif name == "fig2_left":
        specs = tuple(EnsembleSpec("pr", 256, "m", float(m)) for m in _FIG2_MS)
        cfg = SweepConfig(specs, t_max=10, n_operators=100, seed=seed, out_prefix=f"out/{name}_")
    elif name == "fig2_right":
        specs = tuple(EnsembleSpec("pr", 2**n, "m", 8.0) for n in (6, 7, 8, 9))
        cfg = SweepConfig(specs, t_max=10, n_operators=100, seed=seed, out_prefix=f"out/{name}_")
    elif name == "fig3_stats":
        specs = tuple(EnsembleSpec("interpolating", 64, "delta", d) for d in (0.1, 0.5, 0.9, 0.98))
        specs += tuple(EnsembleSpec("pr", 64, "m", float(m)) for m in (2, 4, 8, 16))
        specs += (EnsembleSpec("cue", 64),)
        cfg = SweepConfig(
            specs, t_max=1, n_operators=50, seed=seed, out_prefix=f"out/{name}_",
            stats_flags=("number_variance", "eigvec_hist", "matelem_hist", "asy_bound"),
        )
    elif name == "fig3_chaotic":
        specs = (
            EnsembleSpec("baker", 256),
            EnsembleSpec("sawtooth", 256, "k_max", 5.0),
            EnsembleSpec("harper", 256, "gamma_max", 6.0),
        )
        cfg = SweepConfig(specs, t_max=40, n_operators=50, seed=seed, out_prefix=f"out/{name}_")
    else:
        raise ConfigError(f"unknown preset {name!r}")
    if n_operators is not None:
        cfg = replace(cfg, n_operators=n_operators)
    if out_prefix is not None:
        cfg = replace(cfg, out_prefix=out_prefix)
    return cfg


# -- config files ----------------------------------------------------------

def _parse_list(text, cast):
    return tuple(cast(p.strip()) for p in text.split(",") if p.strip())


def load_config(path):
    """Parse a plain-text `key = value` sweep config into a SweepConfig."""
    keys = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        keys[key] = value
    try:
        kind = keys.pop("ensemble")
        n_dims = _parse_list(keys.pop("n_dim"), int)
    except KeyError as exc:
        raise ConfigError(f"missing required config key {exc}") from exc
    params = _parse_list(keys.pop("param", ""), float)
    param_name = keys.pop(
        "param_name",
        {"interpolating": "delta", "pr": "m", "sawtooth": "k_max", "harper": "gamma_max"}.get(kind, "none"),
    )
    if not params:
        params = ({"sawtooth": 5.0, "harper": 6.0}.get(kind, 0.0),)
    specs = tuple(EnsembleSpec(kind, n, param_name, p) for p in params for n in n_dims)
    initial = keys.pop("initial_states", "all_basis")
    if initial != "all_basis":
        initial = _parse_list(initial, int)
    try:
        cfg = SweepConfig(
            ensembles=specs,
            t_max=int(keys.pop("t_max", 1)),
            n_operators=int(keys.pop("n_operators", 20)),
            initial_states=initial,
            seed=int(keys.pop("seed", 0)),
            out_prefix=keys.pop("out_prefix", "out/sweep_"),
            stats_flags=_parse_list(keys.pop("stats", "q_sweep"), str),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if keys:
        raise ConfigError(f"unknown config keys: {sorted(keys)}")
    return cfg

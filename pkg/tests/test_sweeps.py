import numpy as np
import pytest

from rmxlab.entanglement import q_cue_mean
from rmxlab.sweeps import (
    ConfigError,
    EnsembleSpec,
    SweepConfig,
    SweepRow,
    load_config,
    preset,
    run_q_sweep,
    run_stats_sweep,
    sample_operator,
    write_csv,
)
from rmxlab.core import derive_stream, is_unitary


def small_config(**overrides):
    base = dict(
        ensembles=(EnsembleSpec("interpolating", 8, "delta", 0.5),),
        t_max=3,
        n_operators=4,
        seed=5,
        out_prefix="unused_",
    )
    base.update(overrides)
    return SweepConfig(**base)


def test_sample_operator_all_kinds():
    rng = derive_stream(1, ("kinds",))
    specs = [
        EnsembleSpec("cue", 8),
        EnsembleSpec("interpolating", 8, "delta", 0.7),
        EnsembleSpec("pr", 8, "m", 2.0),
        EnsembleSpec("baker", 8),
        EnsembleSpec("sawtooth", 8, "k_max", 5.0),
        EnsembleSpec("harper", 8, "gamma_max", 6.0),
    ]
    for spec in specs:
        assert is_unitary(sample_operator(spec, rng))


def test_ensemble_spec_validation():
    with pytest.raises(ConfigError):
        EnsembleSpec("nope", 8)
    with pytest.raises(ConfigError):
        EnsembleSpec("interpolating", 8, "delta", 1.5)
    with pytest.raises(ConfigError):
        EnsembleSpec("baker", 9)


def test_q_sweep_delta_zero_is_exactly_zero():
    config = small_config(ensembles=(EnsembleSpec("interpolating", 8, "delta", 0.0),))
    rows = run_q_sweep(config)
    assert len(rows) == config.t_max
    for row in rows:
        assert row.mean_q == 0.0
        assert row.abs_diff_cue == pytest.approx(q_cue_mean(8), abs=1e-12)


def test_q_sweep_row_consistency():
    rows = run_q_sweep(small_config())
    for row in rows:
        assert row.std_q >= 0
        assert row.n_states == 8
        assert row.abs_diff_cue == pytest.approx(abs(row.mean_q - q_cue_mean(8)), abs=1e-12)


def test_q_sweep_matches_serial_recomputation(monkeypatch):
    config = small_config()
    monkeypatch.setenv("RMXLAB_THREADS", "1")
    serial = run_q_sweep(config)
    monkeypatch.setenv("RMXLAB_THREADS", "3")
    parallel = run_q_sweep(config)
    for a, b in zip(serial, parallel):
        assert a == b


def test_basis_subset_initial_states():
    config = small_config(initial_states=(0, 3))
    rows = run_q_sweep(config)
    assert rows[0].n_states == 2


def test_invalid_initial_states_rejected():
    with pytest.raises(ConfigError):
        run_q_sweep(small_config(initial_states=(99,)))


def test_write_csv_empty_and_roundtrip(tmp_path):
    path = tmp_path / "q_sweep.csv"
    write_csv([], path)
    assert path.read_text().strip() == (
        "ensemble,param_name,param_value,n_qubits,n_dim,t,n_ops,n_states,mean_q,std_q,abs_diff_cue"
    )
    row = SweepRow("cue", "none", 0.0, 3, 8, 1, 4, 8, 0.5, 0.1, 0.25)
    write_csv([row], path)
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 2
    fields = lines[1].split(",")
    assert fields[0] == "cue"
    assert float(fields[8]) == 0.5


def test_write_csv_deterministic(tmp_path):
    rows = run_q_sweep(small_config())
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(rows, p1)
    write_csv(run_q_sweep(small_config()), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_stats_sweep_outputs(tmp_path):
    config = small_config(
        ensembles=(EnsembleSpec("cue", 16),),
        n_operators=5,
        out_prefix=str(tmp_path / "cue_"),
        stats_flags=("number_variance", "eigvec_hist", "matelem_hist", "asy_bound"),
    )
    written = run_stats_sweep(config)
    assert set(written) == {"number_variance", "eigvec_hist", "matelem_hist", "asy_bound"}
    nv = written["number_variance"].read_text().splitlines()
    assert nv[0] == "ensemble,param_value,n_dim,L,sigma2,sigma2_cue"
    assert len(nv) == 41
    hist = written["matelem_hist"].read_text().splitlines()
    assert hist[0] == "ensemble,param_value,n_dim,bin_lo,bin_hi,density,reference_density"
    asy = written["asy_bound"].read_text().splitlines()
    assert asy[0] == "ensemble,param_value,n_dim,q_asy_bound"
    assert len(asy) == 2


def test_presets():
    fig2 = preset("fig2_left")
    assert len(fig2.ensembles) == 7
    assert {int(e.param_value) for e in fig2.ensembles} == {2, 4, 8, 16, 24, 32, 40}
    assert fig2.n_operators == 100
    assert all(e.n_dim == 256 for e in fig2.ensembles)
    fig1 = preset("fig1_left")
    assert len(fig1.ensembles) == 9
    assert fig1.ensembles[0].kind == "interpolating"
    chaotic = preset("fig3_chaotic")
    assert {e.kind for e in chaotic.ensembles} == {"baker", "sawtooth", "harper"}
    with pytest.raises(ConfigError):
        preset("fig9")


def test_load_config(tmp_path):
    cfg_file = tmp_path / "sweep.cfg"
    cfg_file.write_text(
        """
# comment line
ensemble = interpolating
param = 0.5, 0.9
n_dim = 8, 16
t_max = 2
n_operators = 3
seed = 11
out_prefix = out/test_
stats = q_sweep
"""
    )
    config = load_config(cfg_file)
    assert len(config.ensembles) == 4
    assert config.seed == 11
    assert config.ensembles[0].param_name == "delta"


def test_load_config_rejects_bad_keys(tmp_path):
    cfg_file = tmp_path / "bad.cfg"
    cfg_file.write_text("ensemble = cue\nn_dim = 8\nbogus = 1\n")
    with pytest.raises(ConfigError):
        load_config(cfg_file)
    cfg_file.write_text("n_dim = 8\n")
    with pytest.raises(ConfigError):
        load_config(cfg_file)

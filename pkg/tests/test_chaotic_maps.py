import numpy as np
import pytest
import scipy.linalg

from rmxlab.chaotic_maps import (
    baker_map,
    dft,
    dft_antiperiodic,
    harper_map,
    sample_harper_gamma,
    sample_sawtooth_kick,
    sawtooth_map,
)
from rmxlab.core import derive_stream, is_unitary


def test_dft_self_inverse():
    for n in (3, 8, 64):
        f = dft(n)
        assert np.max(np.abs(f.conj().T @ f - np.eye(n))) <= 1e-12
        fa = dft_antiperiodic(n)
        assert np.max(np.abs(fa.conj().T @ fa - np.eye(n))) <= 1e-12


def test_baker_unitary_across_sizes():
    for n in (4, 8, 16, 64, 256):
        assert is_unitary(baker_map(n))


def test_baker_rejects_odd_dimension():
    with pytest.raises(ValueError):
        baker_map(5)


def test_baker_small_n_matches_direct_oracle():
    f2 = dft_antiperiodic(2)
    f1 = dft_antiperiodic(1)
    expected = f2.conj().T @ scipy.linalg.block_diag(f1, f1)
    assert np.max(np.abs(baker_map(2) - expected)) <= 1e-12


def test_baker_determinant_modulus():
    phases = np.angle(np.linalg.eigvals(baker_map(64)))
    assert abs(abs(np.prod(np.exp(1j * phases))) - 1.0) <= 1e-8


def test_sawtooth_unitary():
    rng = derive_stream(1, ("saw",))
    for n in (8, 64, 256):
        assert is_unitary(sawtooth_map(n, sample_sawtooth_kick(rng)))


def test_sawtooth_zero_kick_is_free_evolution():
    n = 16
    u = sawtooth_map(n, 0.0)
    f = dft(n)
    m = np.arange(n)
    p = np.where(m < n // 2, m, m - n).astype(float)
    free = f.conj().T @ (np.exp(-1j * (2 * np.pi / n) * p**2 / 2)[:, None] * f)
    assert np.max(np.abs(u - free)) <= 1e-12


def test_sawtooth_kick_sampler_avoids_integers():
    rng = derive_stream(2, ("saw-k",))
    for _ in range(200):
        k = sample_sawtooth_kick(rng)
        assert 0.0 < k < 5.0
        assert abs(k - round(k)) > 1e-6


def test_harper_unitary():
    rng = derive_stream(3, ("harper",))
    for n in (8, 64, 256):
        assert is_unitary(harper_map(n, sample_harper_gamma(rng)))


def test_harper_zero_gamma_is_identity():
    assert np.max(np.abs(harper_map(16, 0.0) - np.eye(16))) <= 1e-12


def test_harper_gamma_sampler_range():
    rng = derive_stream(4, ("harper-g",))
    gammas = [sample_harper_gamma(rng) for _ in range(200)]
    assert min(gammas) >= 1.0 and max(gammas) <= 6.0

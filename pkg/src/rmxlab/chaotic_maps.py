"""Quantized chaotic maps on the N-dimensional torus: baker, sawtooth, kicked Harper."""

import numpy as np
import scipy.linalg


def dft(n_dim):
    """Standard DFT matrix, F_jk = exp(-2 pi i j k / N) / sqrt(N)."""
    idx = np.arange(n_dim)
    return np.exp(-2j * np.pi * np.outer(idx, idx) / n_dim) / np.sqrt(n_dim)


def dft_antiperiodic(n_dim):
    """DFT with half-integer phases, F_jk = exp(-2 pi i (j+1/2)(k+1/2) / N) / sqrt(N)."""
    idx = np.arange(n_dim) + 0.5
    return np.exp(-2j * np.pi * np.outer(idx, idx) / n_dim) / np.sqrt(n_dim)


def baker_map(n_dim):
    """Quantum baker's map B = F_N^{-1} (F_{N/2} + F_{N/2}) with antiperiodic phases."""
    if n_dim % 2 != 0:
        raise ValueError("baker map requires even dimension")
    f_n = dft_antiperiodic(n_dim)
    f_half = dft_antiperiodic(n_dim // 2)
    return f_n.conj().T @ scipy.linalg.block_diag(f_half, f_half)


def _centered_momenta(n_dim):
    # FFT-ordered momentum values m = 0..N/2-1, -N/2..-1
    m = np.arange(n_dim)
    return np.where(m < (n_dim + 1) // 2, m, m - n_dim)


def sawtooth_map(n_dim, k):
    """Sawtooth map, one kick then free evolution with T = 2 pi / N.

    U = F^{-1} D_free F D_kick with position kick phases k (theta - pi)^2 / 2,
    theta_j = 2 pi j / N, and momentum phases -T p^2 / 2 over centered p.
    """
    if n_dim < 2:
        raise ValueError("n_dim must be >= 2")
    theta = 2.0 * np.pi * np.arange(n_dim) / n_dim
    d_kick = np.exp(1j * k * (theta - np.pi) ** 2 / 2.0)
    p = _centered_momenta(n_dim)
    d_free = np.exp(-1j * (2.0 * np.pi / n_dim) * p.astype(float) ** 2 / 2.0)
    f = dft(n_dim)
    return f.conj().T @ (d_free[:, None] * f) * d_kick[None, :]


def harper_map(n_dim, gamma):
    """Kicked Harper map with equal kick strength gamma in both conjugate variables.

    U = F^{-1} D_p F D_q with D_q = exp(-i gamma cos(2 pi j / N)) and the same
    cosine phases in momentum.
    """
    if n_dim < 2:
        raise ValueError("n_dim must be >= 2")
    cosine = np.exp(-1j * gamma * np.cos(2.0 * np.pi * np.arange(n_dim) / n_dim))
    f = dft(n_dim)
    return f.conj().T @ (cosine[:, None] * f) * cosine[None, :]


def sample_sawtooth_kick(rng, k_max=5.0, integer_margin=1e-6):
    """Kick strength uniform on (0, k_max), rejecting values within margin of an integer."""
    while True:
        k = rng.uniform(0.0, k_max)
        if abs(k - round(k)) > integer_margin:
            return k


def sample_harper_gamma(rng, lo=1.0, hi=6.0):
    """Harper kick strength uniform on [lo, hi]."""
    return rng.uniform(lo, hi)

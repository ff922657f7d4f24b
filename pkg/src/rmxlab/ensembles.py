"""Samplers for exact CUE and the one-parameter interpolating ensembles.

Both are built from the same Hurwitz factorization into elementary two-level
rotations; the interpolating family shrinks every angle interval by a factor
delta in [0, 1] and postmultiplies by a diagonal matrix of random phases.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def elementary_rotation(i, j, phi, psi, chi, n_dim):
    """Two-level rotation E^(i,j)(phi, psi, chi) acting on basis indices i < j (1-based).

    Nonzero off-identity elements:
        E_ii = e^{i psi} cos phi     E_ij = e^{i chi} sin phi
        E_ji = -e^{-i chi} sin phi   E_jj = e^{-i psi} cos phi
    """
    if not (1 <= i < j <= n_dim):
        raise ValueError(f"need 1 <= i < j <= n_dim, got i={i}, j={j}, n_dim={n_dim}")
    e = np.eye(n_dim, dtype=complex)
    c, s = np.cos(phi), np.sin(phi)
    a, b = i - 1, j - 1
    e[a, a] = np.exp(1j * psi) * c
    e[a, b] = np.exp(1j * chi) * s
    e[b, a] = -np.exp(-1j * chi) * s
    e[b, b] = np.exp(-1j * psi) * c
    return e


def _rotate_columns(u, a, b, phi, psi, chi):
    # In-place right-multiplication U <- U @ E^(a+1,b+1); touches columns a, b only.
    c, s = np.cos(phi), np.sin(phi)
    col_a = u[:, a].copy()
    col_b = u[:, b]
    u[:, a] = col_a * (np.exp(1j * psi) * c) + col_b * (-np.exp(-1j * chi) * s)
    u[:, b] = col_a * (np.exp(1j * chi) * s) + col_b * (np.exp(-1j * psi) * c)


def _hurwitz_product(n_dim, delta, rng):
    """e^{i alpha} E_1 E_2 ... E_{N-1} with all angle intervals scaled by delta.

    Composite rotation E_s couples the trailing s+1 basis directions; within
    E_s the factor on pair (i, i+1) carries row label r = N-1-i, the angle
    phi = asin(delta * xi^(1/(2r+2))), and only the (N-1, N) factor has a
    nonzero chi. delta = 1 is the exact CUE construction.
    """
    if n_dim < 2:
        raise ValueError("n_dim must be >= 2")
    u = np.eye(n_dim, dtype=complex)
    for s in range(1, n_dim):
        for a in range(n_dim - 1 - s, n_dim - 1):
            r = n_dim - 2 - a
            xi = rng.uniform()
            phi = np.arcsin(delta * xi ** (1.0 / (2.0 * r + 2.0)))
            psi = rng.uniform(0.0, TWO_PI * delta)
            chi = rng.uniform(0.0, TWO_PI * delta) if a == n_dim - 2 else 0.0
            _rotate_columns(u, a, a + 1, phi, psi, chi)
    alpha = rng.uniform(0.0, TWO_PI * delta)
    u *= np.exp(1j * alpha)
    return u


def sample_cue(n_dim, rng):
    """Haar-distributed unitary via the Hurwitz parameterization."""
    return _hurwitz_product(n_dim, 1.0, rng)


def sample_diagonal_phases(n_dim, range_upper, rng):
    """Diagonal unitary with i.i.d. phases uniform on [0, range_upper)."""
    if not 0.0 <= range_upper <= TWO_PI:
        raise ValueError("range_upper must lie in [0, 2pi]")
    return np.diag(np.exp(1j * rng.uniform(0.0, range_upper, size=n_dim)))


def sample_interpolating(n_dim, delta, rng):
    """One-parameter ensemble bridging diagonal random phases (delta=0) and CUE (delta=1).

    The restricted Hurwitz product is postmultiplied on the left by a diagonal
    matrix of phases uniform on [0, 2pi) at every delta; Haar measure is
    invariant under that multiplication, so delta=1 remains exact CUE.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    u = _hurwitz_product(n_dim, delta, rng)
    phases = np.exp(1j * rng.uniform(0.0, TWO_PI, size=n_dim))
    return phases[:, None] * u

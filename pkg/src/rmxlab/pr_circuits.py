"""Pseudo-random operators: layers of per-qubit SU(2) rotations and nearest-neighbor coupling.

Qubit 1 is the most significant bit of the computational basis index
throughout; an n-qubit register acts on dimension N = 2^n.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def pr_parameter_count(n_qubits, m_iterations):
    """Number of independent random parameters, 3n(m+1) + 1."""
    return 3 * n_qubits * (m_iterations + 1) + 1


def sample_su2(rng):
    """2x2 Haar-random rotation (up to global phase).

    Angles: phi = asin(sqrt(xi)), psi and chi uniform on [0, 2pi), arranged
    as the elementary-rotation block, so |u_11|^2 = cos^2 phi is uniform.
    """
    xi = rng.uniform()
    phi = np.arcsin(np.sqrt(xi))
    psi = rng.uniform(0.0, TWO_PI)
    chi = rng.uniform(0.0, TWO_PI)
    c, s = np.cos(phi), np.sin(phi)
    return np.array(
        [
            [np.exp(1j * psi) * c, np.exp(1j * chi) * s],
            [-np.exp(-1j * chi) * s, np.exp(-1j * psi) * c],
        ]
    )


def nn_coupling_phases(n_qubits):
    """Diagonal phases of exp(i (pi/4) sum_j sigma_z^j sigma_z^{j+1}) on the open chain."""
    if n_qubits < 2:
        raise ValueError("need at least 2 qubits")
    n_dim = 2**n_qubits
    basis = np.arange(n_dim)
    # sigma_z eigenvalue of qubit q (1 = MSB): +1 for bit 0, -1 for bit 1
    signs = 1 - 2 * ((basis[:, None] >> (n_qubits - 1 - np.arange(n_qubits))) & 1)
    bond_sum = np.sum(signs[:, :-1] * signs[:, 1:], axis=1)
    return np.exp(1j * (np.pi / 4.0) * bond_sum)


def nn_coupling(n_qubits):
    """The nearest-neighbor coupling operator as a dense diagonal unitary."""
    return np.diag(nn_coupling_phases(n_qubits))


def _rotation_layer(n_qubits, rng):
    layer = np.ones((1, 1), dtype=complex)
    for _ in range(n_qubits):
        layer = np.kron(layer, sample_su2(rng))
    return layer


def sample_pr_operator(n_qubits, m_iterations, rng):
    """m iterations of (per-qubit random rotations, then coupling), plus a final rotation layer.

    U = e^{i alpha} R_{m+1} U_nnc R_m ... U_nnc R_1, with R_1 acting first and
    every rotation independent per qubit and per layer. m = 0 degenerates to a
    single rotation layer.
    """
    if n_qubits < 2:
        raise ValueError("need at least 2 qubits")
    if m_iterations < 0:
        raise ValueError("m_iterations must be >= 0")
    phases = nn_coupling_phases(n_qubits)
    u = _rotation_layer(n_qubits, rng)
    for _ in range(m_iterations):
        u = phases[:, None] * u
        u = _rotation_layer(n_qubits, rng) @ u
    alpha = rng.uniform(0.0, TWO_PI)
    return np.exp(1j * alpha) * u

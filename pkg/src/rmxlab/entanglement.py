"""Entanglement measures for qubit-register pure states.

Qubit 1 is the most significant bit of the basis index. The workhorse is the
average single-qubit linear entropy Q = 2 - (2/n) sum_j Tr[rho_j^2], which is
0 on product states and 1 when every qubit is maximally mixed.
"""

import numpy as np

from .core import spectral_decompose

_SIGMA_YY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)


def _num_qubits(n_dim):
    n = int(n_dim).bit_length() - 1
    if 2**n != n_dim:
        raise ValueError(f"dimension {n_dim} is not a power of two")
    return n


def reduced_density(psi, keep):
    """Partial trace keeping the given 1-based qubit indices, in the given order."""
    psi = np.asarray(psi)
    n = _num_qubits(psi.shape[0])
    keep = list(keep)
    if len(set(keep)) != len(keep) or not all(1 <= q <= n for q in keep):
        raise ValueError(f"invalid qubit index set {keep} for {n} qubits")
    tensor = psi.reshape((2,) * n)
    axes = [q - 1 for q in keep] + [a for a in range(n) if a + 1 not in keep]
    mat = tensor.transpose(axes).reshape(2 ** len(keep), -1)
    return mat @ mat.conj().T


def single_qubit_purities(psi):
    """Tr[rho_j^2] for each qubit j = 1..n."""
    psi = np.asarray(psi)
    n = _num_qubits(psi.shape[0])
    tensor = psi.reshape((2,) * n)
    purities = np.empty(n)
    for j in range(n):
        mat = np.moveaxis(tensor, j, 0).reshape(2, -1)
        rho = mat @ mat.conj().T
        purities[j] = np.sum(np.abs(rho) ** 2)
    return purities


def meyer_wallach_q(psi):
    """Q(psi) = 2 - (2/n) sum_j Tr[rho_j^2].

    Evaluated as (4/n) sum_j det(rho_j), which equals the purity form for
    unit-norm states and is exactly zero on product-of-basis states.
    """
    psi = np.asarray(psi)
    return float(meyer_wallach_q_columns(psi[:, None])[0])


def meyer_wallach_q_columns(matrix):
    """Q of every column of a matrix at once (columns are states)."""
    matrix = np.asarray(matrix)
    n_dim, n_cols = matrix.shape
    n = _num_qubits(n_dim)
    states = matrix.T.reshape((n_cols,) + (2,) * n)
    det_sum = np.zeros(n_cols)
    for j in range(n):
        mat = np.moveaxis(states, 1 + j, 1).reshape(n_cols, 2, -1)
        rho = mat @ mat.conj().transpose(0, 2, 1)
        det_sum += rho[:, 0, 0].real * rho[:, 1, 1].real - np.abs(rho[:, 0, 1]) ** 2
    return (4.0 / n) * det_sum


def q_cue_mean(n_dim):
    """CUE ensemble mean of Q, (N - 2) / (N + 1)."""
    if n_dim < 2:
        raise ValueError("n_dim must be >= 2")
    return (n_dim - 2.0) / (n_dim + 1.0)


def concurrence_msq(psi):
    """Concurrence of the two most significant qubits (qubits 1 and 2).

    Standard mixed-state concurrence: C = max(0, l1 - l2 - l3 - l4) with l_i
    the decreasing square roots of the eigenvalues of
    rho (sy x sy) rho* (sy x sy).
    """
    rho = reduced_density(psi, (1, 2))
    rho_tilde = rho @ _SIGMA_YY @ rho.conj() @ _SIGMA_YY
    eigvals = np.abs(np.real(np.linalg.eigvals(rho_tilde)))
    lams = np.sqrt(np.sort(eigvals)[::-1])
    return float(max(0.0, lams[0] - lams[1] - lams[2] - lams[3]))


def linear_entropy_half(psi):
    """Normalized linear entropy of the leading half of the register.

    Keeps the first ceil(n/2) qubits (dimension d) and returns
    (d/(d-1)) (1 - Tr[rho_A^2]) in [0, 1].
    """
    psi = np.asarray(psi)
    n = _num_qubits(psi.shape[0])
    if n < 2:
        raise ValueError("need at least 2 qubits")
    n_keep = (n + 1) // 2
    d = 2**n_keep
    mat = psi.reshape(d, -1)
    rho = mat @ mat.conj().T
    purity = np.sum(np.abs(rho) ** 2)
    return float(d / (d - 1.0) * (1.0 - purity))


def q_asymptotic_bound(u):
    """Lower bound 2 <Q_eig> - 1 on the long-time average Q of an operator.

    <Q_eig> is the mean Q over the operator's eigenvectors.
    """
    spectrum = spectral_decompose(u)
    q_eig = float(np.mean(meyer_wallach_q_columns(spectrum.vectors)))
    return 2.0 * q_eig - 1.0


def q_from_amplitude_moments(states):
    """Ensemble-mean Q estimated from second moments of amplitude products.

    Evaluates 4 ( sum_{m<=N/2} sum_{n>N/2} <|c_m|^2 |c_n|^2>
                  - sum_{q<=N/2} <|c_q|^2 |c_{q+N/2}|^2> )
    with <.> the empirical mean over the supplied states. The phase
    cross-terms dropped here vanish only under phase averaging, so this
    equals the direct ensemble mean for phase-symmetric ensembles.
    """
    states = [np.asarray(s) for s in states]
    if not states:
        raise ValueError("empty state collection")
    n_dim = states[0].shape[0]
    if any(s.shape[0] != n_dim for s in states):
        raise ValueError("states must share one dimension")
    half = n_dim // 2
    total = 0.0
    for s in states:
        a = np.abs(s) ** 2
        lo, hi = a[:half], a[half:]
        total += 4.0 * (np.sum(lo) * np.sum(hi) - np.sum(lo * hi))
    return total / len(states)

"""Dense complex linear algebra, unitary spectral decompositions, and seeded streams."""

import hashlib
from dataclasses import dataclass

import numpy as np
import scipy.linalg

UNITARITY_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-8
_MASK64 = 0xFFFFFFFFFFFFFFFF


class DecompositionError(RuntimeError):
    """Spectral decomposition failed to converge or reconstruct."""


def kron(a, b):
    """Kronecker (tensor) product of two matrices."""
    return np.kron(np.asarray(a), np.asarray(b))


def unitarity_defect(u):
    """Max-norm of U†U - I."""
    u = np.asarray(u)
    n = u.shape[0]
    return np.max(np.abs(u.conj().T @ u - np.eye(n)))


def is_unitary(u, tol=UNITARITY_TOL):
    return unitarity_defect(u) <= tol


def check_unitary(u, tol=UNITARITY_TOL):
    defect = unitarity_defect(u)
    if defect > tol:
        raise ValueError(f"matrix is not unitary: max-norm defect {defect:.3e} > {tol:.1e}")


def apply(u, psi):
    """Apply an operator to a state vector, U·psi."""
    u = np.asarray(u)
    psi = np.asarray(psi)
    if u.shape[1] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: operator {u.shape} vs state length {psi.shape[0]}")
    return u @ psi


@dataclass
class SpectrumSample:
    """Eigenphases in [0, 2pi) sorted ascending and matching unit-norm eigenvectors.

    ``vectors`` holds eigenvectors as columns; it may be None for phase-only
    samples (e.g. synthetic Poisson spectra).
    """

    phases: np.ndarray
    vectors: np.ndarray | None = None


def spectral_decompose(u):
    """Eigenphases and orthonormal eigenvectors of a unitary matrix.

    Uses the complex Schur form, which is diagonal for normal matrices, so the
    eigenvector basis stays orthonormal even with (near-)degenerate phases.
    """
    u = np.asarray(u, dtype=complex)
    check_unitary(u)
    try:
        t, z = scipy.linalg.schur(u, output="complex")
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise DecompositionError(f"Schur decomposition failed: {exc}") from exc
    eigvals = np.diag(t)
    phases = np.mod(np.angle(eigvals), 2.0 * np.pi)
    order = np.argsort(phases, kind="stable")
    phases = phases[order]
    vectors = z[:, order]
    recon = (vectors * np.exp(1j * phases)) @ vectors.conj().T
    residual = np.max(np.abs(u - recon))
    if residual > RECONSTRUCTION_TOL:
        raise DecompositionError(f"spectral reconstruction residual {residual:.3e} exceeds tolerance")
    return SpectrumSample(phases=phases, vectors=vectors)


def _label_key(label):
    if isinstance(label, (int, np.integer)):
        return int(label) & _MASK64
    digest = hashlib.sha256(str(label).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def derive_stream(seed, path=()):
    """Independent, reproducible random stream keyed by (seed, path).

    Identical (seed, path) pairs yield identical variate sequences regardless
    of process or schedule; distinct paths give statistically independent
    streams. Path labels may be ints or strings.
    """
    entropy = [int(seed) & _MASK64] + [_label_key(p) for p in path]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))

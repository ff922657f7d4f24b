import numpy as np
import pytest
import scipy.linalg

from rmxlab.core import derive_stream, is_unitary, kron
from rmxlab.entanglement import meyer_wallach_q_columns
from rmxlab.pr_circuits import (
    nn_coupling,
    nn_coupling_phases,
    pr_parameter_count,
    sample_pr_operator,
    sample_su2,
)

SZ = np.diag([1.0, -1.0]).astype(complex)


def test_parameter_count_examples():
    assert pr_parameter_count(8, 8) == 217
    assert pr_parameter_count(2, 0) == 7


def test_parameter_count_below_cue_budget():
    for n in (4, 6, 8):
        for m in (n, n**2):
            assert pr_parameter_count(n, m) < 4**n


def test_su2_block_structure():
    rng = derive_stream(1, ("su2",))
    u = sample_su2(rng)
    assert is_unitary(u)
    assert abs(u[0, 0] - u[1, 1].conj()) < 1e-12
    assert abs(u[0, 1] + u[1, 0].conj()) < 1e-12
    assert abs(abs(np.linalg.det(u)) - 1.0) < 1e-12


def test_su2_top_left_amplitude_statistics():
    rng = derive_stream(2, ("su2-stats",))
    vals = np.array([np.abs(sample_su2(rng)[0, 0]) ** 2 for _ in range(10**5)])
    sem = vals.std(ddof=1) / np.sqrt(vals.size)
    assert abs(vals.mean() - 0.5) <= 3 * sem
    # |u_11|^2 = cos^2(phi) = 1 - xi is uniform on [0, 1]
    hist, _ = np.histogram(vals, bins=10, range=(0, 1))
    assert np.max(np.abs(hist / vals.size - 0.1)) < 0.01


def test_nn_coupling_two_qubits():
    expected = np.diag(np.exp(1j * np.pi / 4 * np.array([1.0, -1.0, -1.0, 1.0])))
    assert np.allclose(nn_coupling(2), expected)


def test_nn_coupling_three_qubit_ground_state_phase():
    phases = nn_coupling_phases(3)
    assert abs(phases[0] - np.exp(1j * np.pi / 2)) < 1e-12


def test_nn_coupling_diagonal_unimodular():
    u = nn_coupling(5)
    assert np.allclose(np.abs(np.diag(u)), 1.0)
    assert np.max(np.abs(u - np.diag(np.diag(u)))) == 0.0


def test_nn_coupling_matches_matrix_exponential():
    # kron-built exponent oracle for the closed-form diagonal
    for n in (2, 3, 4):
        bonds = np.zeros((2**n, 2**n), dtype=complex)
        for j in range(n - 1):
            term = np.eye(1, dtype=complex)
            for q in range(n):
                term = kron(term, SZ if q in (j, j + 1) else np.eye(2))
            bonds += term
        expected = scipy.linalg.expm(1j * np.pi / 4 * bonds)
        assert np.max(np.abs(nn_coupling(n) - expected)) <= 1e-12


def test_pr_m0_generates_no_entanglement():
    rng = derive_stream(3, ("pr0",))
    u = sample_pr_operator(2, 0, rng)
    assert np.max(meyer_wallach_q_columns(u)) <= 1e-12


def test_pr_operator_unitary_and_reproducible():
    u1 = sample_pr_operator(4, 3, derive_stream(4, ("pr", 0)))
    u2 = sample_pr_operator(4, 3, derive_stream(4, ("pr", 0)))
    assert is_unitary(u1)
    assert np.array_equal(u1, u2)


def test_pr_entanglement_monotone_in_m():
    rng = derive_stream(5, ("pr-mono",))
    n_ops = 20
    means = {}
    sems = {}
    for m in (2, 4, 8, 16):
        vals = []
        for _ in range(n_ops):
            u = sample_pr_operator(6, m, rng)
            vals.append(np.mean(meyer_wallach_q_columns(u)))
        vals = np.asarray(vals)
        means[m] = vals.mean()
        sems[m] = vals.std(ddof=1) / np.sqrt(n_ops)
    for lo, hi in ((2, 4), (4, 8), (8, 16)):
        gap = means[hi] - means[lo]
        assert gap > 0
        assert gap > np.hypot(sems[lo], sems[hi])


def test_pr_rejects_invalid_sizes():
    rng = derive_stream(6, ("pr-bad",))
    with pytest.raises(ValueError):
        sample_pr_operator(1, 2, rng)
    with pytest.raises(ValueError):
        sample_pr_operator(3, -1, rng)

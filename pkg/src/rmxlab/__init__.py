"""Numerical laboratory for entanglement generation of nearly-random unitary operators."""

from .core import (
    DecompositionError,
    SpectrumSample,
    apply,
    derive_stream,
    is_unitary,
    kron,
    spectral_decompose,
)
from .ensembles import (
    elementary_rotation,
    sample_cue,
    sample_diagonal_phases,
    sample_interpolating,
)
from .entanglement import (
    concurrence_msq,
    linear_entropy_half,
    meyer_wallach_q,
    q_asymptotic_bound,
    q_cue_mean,
    q_from_amplitude_moments,
    reduced_density,
)
from .pr_circuits import nn_coupling, pr_parameter_count, sample_pr_operator, sample_su2
from .chaotic_maps import baker_map, harper_map, sawtooth_map
from .spectral_stats import (
    cue_number_variance,
    eigenvector_amplitude_hist,
    ks_distance,
    matrix_element_hist,
    number_variance,
    unfold,
)

__all__ = [
    "DecompositionError",
    "SpectrumSample",
    "apply",
    "baker_map",
    "concurrence_msq",
    "cue_number_variance",
    "derive_stream",
    "eigenvector_amplitude_hist",
    "elementary_rotation",
    "harper_map",
    "is_unitary",
    "kron",
    "ks_distance",
    "linear_entropy_half",
    "matrix_element_hist",
    "meyer_wallach_q",
    "nn_coupling",
    "number_variance",
    "pr_parameter_count",
    "q_asymptotic_bound",
    "q_cue_mean",
    "q_from_amplitude_moments",
    "reduced_density",
    "sample_cue",
    "sample_diagonal_phases",
    "sample_interpolating",
    "sample_pr_operator",
    "sample_su2",
    "sawtooth_map",
    "spectral_decompose",
    "unfold",
]

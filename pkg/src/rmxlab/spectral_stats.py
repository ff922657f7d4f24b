"""Random-matrix statistics: number variance, eigenvector and matrix-element amplitude laws."""

from dataclasses import dataclass

import numpy as np

EULER_GAMMA = 0.5772156649

DEFAULT_BIN_EDGES = np.linspace(0.0, 10.0, 101)


@dataclass
class Histogram:
    """Normalized density histogram; tail mass beyond the last edge sits in the last bin."""

    bin_edges: np.ndarray
    densities: np.ndarray
    n_samples: int
    tail_fraction: float = 0.0

    def integral(self):
        return float(np.sum(self.densities * np.diff(self.bin_edges)))


def unfold(phases, n_dim):
    """Rescale eigenphases to unit mean density, x = N theta / (2 pi)."""
    return np.asarray(phases) * n_dim / (2.0 * np.pi)


def _sample_phases(sample):
    return np.asarray(getattr(sample, "phases", sample))


def cue_number_variance(l_value):
    """Large-N CUE number variance, (ln(2 pi L) + 1 + gamma) / pi^2."""
    l_value = np.asarray(l_value, dtype=float)
    if np.any(l_value <= 0):
        raise ValueError("L must be positive")
    return (np.log(2.0 * np.pi * l_value) + 1.0 + EULER_GAMMA) / np.pi**2


def number_variance(ensemble, l_grid):
    """Variance of the unfolded level count in windows of length L.

    For each spectrum, counts are taken in 2N windows with equally spaced
    start positions, wrapped around the circle of circumference N; the
    variance pools all windows of all spectra. Returns (L, sigma^2) pairs.
    """
    spectra = [_sample_phases(s) for s in ensemble]
    if not spectra:
        raise ValueError("empty ensemble")
    l_grid = np.asarray(l_grid, dtype=float)
    results = np.empty_like(l_grid)
    unfolded = []
    for phases in spectra:
        n_dim = len(phases)
        unfolded.append((np.sort(unfold(phases, n_dim)), n_dim))
    for k, l_value in enumerate(l_grid):
        counts = []
        for xs, n_dim in unfolded:
            starts = np.arange(2 * n_dim) * 0.5
            ends = starts + l_value
            lo = np.searchsorted(xs, starts, side="left")
            hi = np.searchsorted(xs, np.minimum(ends, n_dim), side="left")
            wrap = np.searchsorted(xs, np.maximum(ends - n_dim, 0.0), side="left")
            counts.append(hi - lo + wrap)
        counts = np.concatenate(counts).astype(float)
        results[k] = np.mean(counts**2) - np.mean(counts) ** 2
    return list(zip(l_grid.tolist(), results.tolist()))


def _pooled_histogram(values, bin_edges):
    values = np.asarray(values, dtype=float)
    edges = np.asarray(bin_edges, dtype=float)
    in_range = np.clip(values, edges[0], np.nextafter(edges[-1], -np.inf))
    counts, _ = np.histogram(in_range, bins=edges)
    widths = np.diff(edges)
    densities = counts / (values.size * widths)
    tail = float(np.mean(values >= edges[-1]))
    return Histogram(bin_edges=edges, densities=densities, n_samples=values.size, tail_fraction=tail)


def eigenvector_amplitude_hist(ensemble, bin_edges=None):
    """Pooled histogram of rescaled eigenvector amplitudes y = N |c|^2."""
    edges = DEFAULT_BIN_EDGES if bin_edges is None else bin_edges
    pooled = []
    for sample in ensemble:
        vectors = sample.vectors
        n_dim = vectors.shape[0]
        pooled.append(n_dim * np.abs(vectors.ravel()) ** 2)
    if not pooled:
        raise ValueError("empty ensemble")
    return _pooled_histogram(np.concatenate(pooled), edges)


def matrix_element_hist(operators, bin_edges=None):
    """Pooled histogram of rescaled matrix-element amplitudes x = N |U_ij|^2."""
    edges = DEFAULT_BIN_EDGES if bin_edges is None else bin_edges
    pooled = [op.shape[0] * np.abs(np.asarray(op).ravel()) ** 2 for op in operators]
    if not pooled:
        raise ValueError("empty operator collection")
    return _pooled_histogram(np.concatenate(pooled), edges)


def rescaled_amplitudes(operators):
    """Pooled x = N |U_ij|^2 values without binning (for KS tests)."""
    return np.concatenate([op.shape[0] * np.abs(np.asarray(op).ravel()) ** 2 for op in operators])


def rescaled_eigenvector_amplitudes(ensemble):
    """Pooled y = N |c|^2 values without binning (for KS tests)."""
    return np.concatenate(
        [s.vectors.shape[0] * np.abs(s.vectors.ravel()) ** 2 for s in ensemble]
    )


def exponential_cdf(x):
    """Unit-mean exponential CDF, 1 - e^{-x}."""
    return 1.0 - np.exp(-np.asarray(x, dtype=float))


def ks_distance(samples, reference_cdf="exponential"):
    """Sup-norm distance between the empirical CDF of samples and a reference CDF.

    reference_cdf may be 'exponential' (unit mean) or any vectorized callable.
    """
    samples = np.sort(np.asarray(samples, dtype=float))
    if samples.size < 100:
        raise ValueError(f"need at least 100 samples, got {samples.size}")
    if reference_cdf == "exponential":
        reference_cdf = exponential_cdf
    cdf_vals = np.asarray(reference_cdf(samples))
    n = samples.size
    upper = np.arange(1, n + 1) / n - cdf_vals
    lower = cdf_vals - np.arange(0, n) / n
    return float(max(np.max(upper), np.max(lower)))

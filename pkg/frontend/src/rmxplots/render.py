"""Render sweep CSVs as figures: Q-vs-t convergence, number variance, amplitude histograms."""

import csv
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

FIGURE_KINDS = ("q_vs_t", "number_variance", "histogram")

Q_SWEEP_COLUMNS = [
    "ensemble", "param_name", "param_value", "n_qubits", "n_dim", "t",
    "n_ops", "n_states", "mean_q", "std_q", "abs_diff_cue",
]
NUMBER_VARIANCE_COLUMNS = ["ensemble", "param_value", "n_dim", "L", "sigma2", "sigma2_cue"]
HIST_COLUMNS = ["ensemble", "param_value", "n_dim", "bin_lo", "bin_hi", "density", "reference_density"]
ASY_BOUND_COLUMNS = ["ensemble", "param_value", "n_dim", "q_asy_bound"]

_NUMERIC = {
    "param_value", "n_qubits", "n_dim", "t", "n_ops", "n_states",
    "mean_q", "std_q", "abs_diff_cue", "L", "sigma2", "sigma2_cue",
    "bin_lo", "bin_hi", "density", "reference_density", "q_asy_bound",
}


class SchemaError(ValueError):
    """CSV header or cell does not match the expected sweep schema."""


@dataclass
class FigureJob:
    csv_paths: list
    figure_kind: str
    output_path: str

    def __post_init__(self):
        if self.figure_kind not in FIGURE_KINDS:
            raise SchemaError(f"unknown figure kind {self.figure_kind!r}")
        for p in self.csv_paths:
            if not Path(p).exists():
                raise SchemaError(f"input file not found: {p}")


@dataclass
class Table:
    path: str
    columns: list
    rows: list = field(default_factory=list)


_SCHEMAS = {
    "q_sweep": Q_SWEEP_COLUMNS,
    "number_variance": NUMBER_VARIANCE_COLUMNS,
    "hist": HIST_COLUMNS,
    "asy_bound": ASY_BOUND_COLUMNS,
}


def read_table(path):
    """Read one sweep CSV, identifying its schema from the header."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected a header row") from None
        schema = None
        for name, columns in _SCHEMAS.items():
            if header == columns:
                schema = name
                break
        if schema is None:
            expected = {c for cols in _SCHEMAS.values() for c in cols}
            bad = [c for c in header if c not in expected] or header
            raise SchemaError(f"{path}: unrecognized column {bad[0]!r}")
        table = Table(path=str(path), columns=header)
        for lineno, raw in enumerate(reader, 2):
            if len(raw) != len(header):
                raise SchemaError(f"{path}:{lineno}: expected {len(header)} fields")
            row = {}
            for col, cell in zip(header, raw):
                if col in _NUMERIC:
                    try:
                        row[col] = float(cell)
                    except ValueError:
                        raise SchemaError(f"{path}:{lineno}: column {col!r} is not numeric") from None
                else:
                    row[col] = cell
            table.rows.append(row)
        table.schema = schema
        return table


def _group(rows, keys):
    groups = {}
    for row in rows:
        groups.setdefault(tuple(row[k] for k in keys), []).append(row)
    return dict(sorted(groups.items()))


def _series_label(key_rows):
    key, rows = key_rows
    first = rows[0]
    name = first.get("param_name", "param")
    if name in ("none", ""):
        return f"{first['ensemble']} N={int(first['n_dim'])}"
    value = first["param_value"]
    value_text = f"{int(value)}" if float(value).is_integer() else f"{value:g}"
    return f"{name}={value_text}"


def _render_q_vs_t(tables, ax):
    bounds = []
    plotted = False
    for table in tables:
        if table.schema == "asy_bound":
            bounds.extend(table.rows)
            continue
        if table.schema != "q_sweep":
            raise SchemaError(f"{table.path}: expected q_sweep or asy_bound data for q_vs_t")
        for key, rows in _group(table.rows, ("ensemble", "param_value", "n_dim")).items():
            rows = sorted(rows, key=lambda r: r["t"])
            ax.semilogy(
                [r["t"] for r in rows],
                [max(r["abs_diff_cue"], 1e-16) for r in rows],
                marker="o", markersize=3,
                label=_series_label((key, rows)),
            )
            plotted = True
    for row in bounds:
        n_dim = row["n_dim"]
        cue = (n_dim - 2.0) / (n_dim + 1.0)
        ax.axhline(abs(row["q_asy_bound"] - cue), linestyle=":", color="gray", linewidth=1)
    ax.set_xlabel("t")
    ax.set_ylabel("|<Q> - <Q>_CUE|")
    if plotted:
        ax.legend(fontsize=8)
    return plotted


def _render_number_variance(tables, ax):
    plotted = False
    reference = None
    for table in tables:
        if table.schema != "number_variance":
            raise SchemaError(f"{table.path}: expected number_variance data")
        for key, rows in _group(table.rows, ("ensemble", "param_value", "n_dim")).items():
            rows = sorted(rows, key=lambda r: r["L"])
            ax.plot([r["L"] for r in rows], [r["sigma2"] for r in rows],
                    marker=".", label=_series_label((key, rows)))
            reference = rows
            plotted = True
    if reference is not None:
        ax.plot([r["L"] for r in reference], [r["sigma2_cue"] for r in reference],
                "k-", linewidth=1.2, label="CUE closed form")
    ax.set_xlabel("L")
    ax.set_ylabel("Sigma^2(L)")
    if plotted:
        ax.legend(fontsize=8)
    return plotted


def _render_histogram(tables, ax):
    plotted = False
    reference = None
    for table in tables:
        if table.schema != "hist":
            raise SchemaError(f"{table.path}: expected histogram data")
        for key, rows in _group(table.rows, ("ensemble", "param_value", "n_dim")).items():
            rows = sorted(rows, key=lambda r: r["bin_lo"])
            centers = [(r["bin_lo"] + r["bin_hi"]) / 2 for r in rows]
            ax.semilogy(centers, [max(r["density"], 1e-12) for r in rows],
                        drawstyle="steps-mid", label=_series_label((key, rows)))
            reference = (centers, [max(r["reference_density"], 1e-12) for r in rows])
            plotted = True
    if reference is not None:
        ax.semilogy(reference[0], reference[1], "k--", linewidth=1.2, label="exp reference")
    ax.set_xlabel("rescaled amplitude")
    ax.set_ylabel("density")
    if plotted:
        ax.legend(fontsize=8)
    return plotted


def render(job):
    """Render the job to its output image; returns the matplotlib figure."""
    tables = [read_table(p) for p in job.csv_paths]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    renderer = {
        "q_vs_t": _render_q_vs_t,
        "number_variance": _render_number_variance,
        "histogram": _render_histogram,
    }[job.figure_kind]
    plotted = renderer(tables, ax)
    if not plotted:
        warnings.warn(f"no data rows in {', '.join(str(p) for p in job.csv_paths)}; writing empty axes")
    fig.tight_layout()
    fig.savefig(job.output_path, dpi=150)
    plt.close(fig)
    return fig

"""Figure rendering for rmxlab sweep CSV outputs."""

from .render import FIGURE_KINDS, FigureJob, SchemaError, read_table, render

__all__ = ["FIGURE_KINDS", "FigureJob", "SchemaError", "read_table", "render"]

"""Rendering and metric export."""

from .export import compare_csv, curves_csv, summary_csv, write_csv
from .render import LabeledPath, render_svg, write_svg

__all__ = [
    "LabeledPath",
    "compare_csv",
    "curves_csv",
    "render_svg",
    "summary_csv",
    "write_csv",
    "write_svg",
]

"""Small shared output helpers: deterministic CSV number formatting."""

from __future__ import annotations


def fmt(x: float) -> str:
    """Format a float with 9 significant digits for CSV emission."""
    return f"{x:.9g}"

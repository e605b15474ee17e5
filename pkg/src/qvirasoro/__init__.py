"""Exact engine for a deformed Virasoro algebra and its Macdonald-polynomial singular vectors."""

__version__ = "0.1.0"

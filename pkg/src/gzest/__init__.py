"""Exact skeletal G-crossed braided fusion categories, zesting, and modular data."""

__version__ = "0.1.0"

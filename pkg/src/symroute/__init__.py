"""Adaptive symbolic-language routing for logical question answering."""

__version__ = "0.1.0"

"""Symbolic calculator for the mod-2 algebra of higher divided squares."""

__version__ = "0.1.0"

"""Preselection bandits under Plackett-Luce choice."""

__version__ = "0.1.0"

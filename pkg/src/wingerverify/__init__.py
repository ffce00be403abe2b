"""Exact verification toolkit for the icosahedral plane action and the Winger pencil."""

__version__ = "0.1.0"

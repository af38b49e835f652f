"""CLI components for doublegraph."""

from .main import main

__all__ = ["main"]

"""Command-line interface for dicodim."""

from dicodim.cli.commands import app

__all__ = ["app"]

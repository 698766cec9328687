"""
Entry point for running dicodim as a module: python -m dicodim
"""

from dicodim.cli.commands import app

if __name__ == "__main__":
    app()

"""Shared fixtures."""

import pytest


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep ~/.dicodim and DICODIM_* settings out of the tests."""
    home = tmp_path / "home"
    home.mkdir()
    monkeypatch.setenv("HOME", str(home))
    for var in ("DICODIM_LIMITS__MAX_FREE_DIM", "DICODIM_LIMITS__MAX_ROWS", "DICODIM_OUTPUT__FORMAT"):
        monkeypatch.delenv(var, raising=False)
    return home

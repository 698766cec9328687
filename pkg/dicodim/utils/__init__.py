"""Utility functions."""

from dicodim.utils.helpers import decimal_str, fstr, integer_nth_root, root_enclosure

__all__ = ["fstr", "integer_nth_root", "root_enclosure", "decimal_str"]

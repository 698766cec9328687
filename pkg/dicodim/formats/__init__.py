"""Text formats for variety presentations and finite-dimensional algebras."""

from dicodim.formats.algebra import emit_algebra, load_algebra_file, parse_algebra
from dicodim.formats.header import parse_header
from dicodim.formats.variety import emit_variety, load_variety_file, parse_variety

__all__ = [
    "parse_header",
    "parse_variety",
    "emit_variety",
    "load_variety_file",
    "parse_algebra",
    "emit_algebra",
    "load_algebra_file",
]

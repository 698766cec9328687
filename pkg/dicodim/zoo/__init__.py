"""Shipped example varieties and algebras."""

from dicodim.zoo.loader import BUILTIN_ZOO_DIR, ZooLoader, load_algebra, load_variety

__all__ = ["BUILTIN_ZOO_DIR", "ZooLoader", "load_variety", "load_algebra"]

"""Lookup of shipped and user-supplied variety and algebra files."""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from loguru import logger

from dicodim.concrete.algebra import FinDimAlgebra
from dicodim.formats import load_algebra_file, load_variety_file
from dicodim.tideal import VarietyPresentation

# Shipped example directory (relative to this file)
BUILTIN_ZOO_DIR = Path(__file__).parent / "data"

Kind = Literal["variety", "algebra"]
SUFFIXES: dict[str, str] = {"variety": ".var", "algebra": ".alg"}


class ZooLoader:
    """
    Finds ``.var`` and ``.alg`` files by name.

    Extra directories are searched first, then the shipped zoo.
    """

    def __init__(self, extra_dirs: list[str | Path] | None = None, builtin_dir: Path | None = None):
        self.extra_dirs = [Path(d).expanduser() for d in extra_dirs or []]
        self.builtin_dir = builtin_dir or BUILTIN_ZOO_DIR

    def _dirs(self) -> list[tuple[Path, str]]:
        return [(d, "extra") for d in self.extra_dirs] + [(self.builtin_dir, "builtin")]

    def list_entries(self) -> list[dict[str, str]]:
        """
        List all entries.

        Returns:
            Dicts with 'name', 'kind', 'path', 'source'; earlier directories
            shadow later ones.
        """
        entries: list[dict[str, str]] = []
        seen: set[tuple[str, str]] = set()
        for directory, source in self._dirs():
            if not directory.exists():
                continue
            for kind, suffix in SUFFIXES.items():
                for path in sorted(directory.glob(f"*{suffix}")):
                    if (kind, path.stem) in seen:
                        continue
                    seen.add((kind, path.stem))
                    entries.append(
                        {"name": path.stem, "kind": kind, "path": str(path), "source": source}
                    )
        return sorted(entries, key=lambda e: (e["kind"], e["name"]))

    def find(self, name: str, kind: Kind) -> Path | None:
        suffix = SUFFIXES[kind]
        for directory, _ in self._dirs():
            path = directory / f"{name}{suffix}"
            if path.exists():
                return path
        return None

    def resolve(self, arg: str, kind: Kind) -> Path:
        """A file path, or the zoo entry of that name."""
        path = Path(arg).expanduser()
        if path.is_file():
            return path
        found = self.find(arg, kind)
        if found is None:
            raise FileNotFoundError(f"No {kind} file or zoo entry named {arg!r}")
        logger.debug(f"Resolved {kind} {arg!r} to {found}")
        return found


@lru_cache(maxsize=None)
def _load_variety(path: Path) -> VarietyPresentation:
    return load_variety_file(path)


@lru_cache(maxsize=None)
def _load_algebra(path: Path) -> FinDimAlgebra:
    return load_algebra_file(path)


def load_variety(name: str, loader: ZooLoader | None = None) -> VarietyPresentation:
    """Load a variety presentation by path or zoo name."""
    loader = loader or ZooLoader()
    return _load_variety(loader.resolve(name, "variety").resolve())


def load_algebra(name: str, loader: ZooLoader | None = None) -> FinDimAlgebra:
    """Load an algebra by path or zoo name."""
    loader = loader or ZooLoader()
    return _load_algebra(loader.resolve(name, "algebra").resolve())

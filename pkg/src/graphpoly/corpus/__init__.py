"""Bundled graph files.  Files with an ``embedding`` section load as plane graphs."""

from __future__ import annotations

from functools import lru_cache
from importlib.resources import files

from ..graphfile import GraphFile, parse_graph_file

PLANE_CORPUS = ("k2", "p3", "c3", "c4", "theta", "k4", "w4", "prism", "cube")


def names() -> list[str]:
    return sorted(p.name[:-2] for p in files(__name__).iterdir() if p.name.endswith(".g"))


@lru_cache(maxsize=None)
def load(name: str) -> GraphFile:
    return parse_graph_file(files(__name__).joinpath(f"{name}.g").read_text(encoding="utf-8"))


def text(name: str) -> str:
    return files(__name__).joinpath(f"{name}.g").read_text(encoding="utf-8")


def plane_names() -> list[str]:
    return [n for n in names() if load(n).plane is not None]

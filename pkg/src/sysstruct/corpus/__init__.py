"""Bundled example systems, one realization per file."""
from __future__ import annotations

import json
from importlib import resources

from ..gds import Gds, parse_edge_list
from ..io import realization_from_dict
from ..realization import GeneralizedRealization

__all__ = ["names", "graph_names", "path", "load", "load_graph", "load_all"]


def _root():
    return resources.files(__name__)


def names() -> list[str]:
    return sorted(p.name[:-5] for p in _root().iterdir() if p.name.endswith(".json"))


def path(name: str):
    """Traversable for ``name``; ``gds-ring`` resolves to the edge-list file."""
    for suffix in (".json", ".edges"):
        p = _root() / (name + suffix)
        if p.is_file():
            return p
    raise KeyError(f"no corpus entry {name!r}; have {names()}")


def graph_names() -> list[str]:
    return sorted(p.name[:-6] for p in _root().iterdir() if p.name.endswith(".edges"))


def load(name: str) -> GeneralizedRealization:
    return realization_from_dict(json.loads(path(name).read_text(encoding="utf-8")))


def load_all() -> dict[str, GeneralizedRealization]:
    return {n: load(n) for n in names()}


def load_graph(name: str) -> Gds:
    """Graph dynamical system stored as an edge list."""
    return parse_edge_list((_root() / (name + ".edges")).read_text(encoding="utf-8"))

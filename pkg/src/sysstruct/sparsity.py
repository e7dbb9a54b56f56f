"""Sparsity structure: which inputs reach which outputs through ``G(s)``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polyrat import RationalFunction, RationalMatrix

__all__ = ["SparsityStructure", "sparsity"]


@dataclass(frozen=True)
class SparsityStructure:
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    edges: tuple[tuple[str, str, RationalFunction], ...]  # (u_i, y_j, G_ji)

    def edge_set(self) -> set[tuple[str, str]]:
        return {(a, b) for a, b, _ in self.edges}

    def pattern(self) -> list[list[bool]]:
        hit = self.edge_set()
        return [[(u, y) in hit for u in self.inputs] for y in self.outputs]

    def to_dot(self) -> str:
        from .dot import sparsity_dot
        return sparsity_dot(self)


def sparsity(G: RationalMatrix, inputs: Sequence[str] | None = None,
             outputs: Sequence[str] | None = None) -> SparsityStructure:
    p, m = G.shape
    inputs = tuple(inputs) if inputs is not None else tuple(f"u{i + 1}" for i in range(m))
    outputs = tuple(outputs) if outputs is not None else tuple(f"y{j + 1}" for j in range(p))
    if len(inputs) != m or len(outputs) != p:
        raise ValueError("label counts do not match G")
    edges = tuple((inputs[i], outputs[j], G[j, i])
                  for i in range(m) for j in range(p) if not G[j, i].is_zero())
    return SparsityStructure(inputs, outputs, edges)

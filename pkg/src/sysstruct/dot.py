"""Graphviz DOT text for the four structure graphs.

Output is byte-stable: nodes and edges are emitted in a fixed order and
nothing depends on set or dict iteration order.
"""
from __future__ import annotations

from typing import Iterable, Sequence

__all__ = ["comp_structure_dot", "subsystem_dot", "signal_dot", "sparsity_dot", "quote"]

_FILL = {"u": "palegreen", "f": "white", "g": "lightyellow", "h": "palegreen"}


def quote(text) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge(a, b, label) -> str:
    return f"  {quote(a)} -> {quote(b)} [label={quote(label)}];"


def comp_structure_dot(c, partition: Sequence[Iterable] | None = None, name: str = "C") -> str:
    """Box per vertex, edges labelled with the variable they carry.

    Non-singleton parts of ``partition`` are drawn as shaded clusters.
    """
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box, style=filled];"]
    clustered = set()
    if partition is not None:
        k = 0
        for part in partition:
            part = sorted(part)
            if len(part) < 2:
                continue
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append('    style=filled; color=lightgrey;')
            lines.append(f"    label={quote('S' + str(k + 1))};")
            for v in part:
                lines.append(f"    {quote(v.name)} [fillcolor={_FILL[v.kind]}];")
                clustered.add(v)
            lines.append("  }")
            k += 1
    for v in c.vertices:
        if v not in clustered:
            lines.append(f"  {quote(v.name)} [fillcolor={_FILL[v.kind]}];")
    for a, b, var in c.labelled_edges():
        lines.append(_edge(a.name, b.name, var))
    lines.append("}")
    return "\n".join(lines) + "\n"


def subsystem_dot(ss, name: str = "S") -> str:
    """Condensed graph: one box per component, edges carry manifest variables."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box, style=filled];"]
    for i, comp in enumerate(ss.components):
        names = ",".join(v.name for v in comp)
        if len(comp) == 1:
            label, fill = names, _FILL[comp[0].kind]
        else:
            label, fill = f"S{i + 1}: {{{names}}}", "lightgrey"
        lines.append(f"  c{i} [label={quote(label)}, fillcolor={fill}];")
    for a, b, var in ss.edges:
        lines.append(f"  c{a} -> c{b} [label={quote(var)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def signal_dot(g, name: str = "W") -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(f"  {quote(v)};")
    for a, b, tf in g.edges:
        lines.append(_edge(a, b, tf))
    lines.append("}")
    return "\n".join(lines) + "\n"


def sparsity_dot(z, name: str = "Z") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for group in (z.inputs, z.outputs):
        lines.append("  { rank=same; " + " ".join(quote(v) + ";" for v in group) + " }")
    for a, b, tf in z.edges:
        lines.append(_edge(a, b, tf))
    lines.append("}")
    return "\n".join(lines) + "\n"

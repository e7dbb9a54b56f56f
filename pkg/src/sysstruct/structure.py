"""Computational structure graphs, subsystem structure and LFT extraction.

Vertices are typed: inputs ``u_i`` (sources), states ``f_j``, auxiliaries
``g_k`` and outputs ``h_r`` (terminal).  Every edge leaving a vertex carries
the variable that vertex produces.  A variable is *manifest* when it is an
input, or when some output equation is exactly that variable (a single
nonzero coefficient equal to 1); every other variable is hidden.

The subsystem structure is the condensation of the graph by the finest
partition that keeps every hidden edge inside a component, which is the
unique admissible partition of maximal cardinality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AlgebraicLoop, InconsistentComponent, SingularMatrix
from .polyrat import RationalMatrix
from .qmatrix import QMatrix
from .realization import GeneralizedRealization, StateRealization, transfer_function

__all__ = [
    "Vertex",
    "CompStructure",
    "SubsystemStructure",
    "Block",
    "LftForm",
    "comp_structure",
    "subsystem_structure",
    "subsystem_tf",
    "to_lft",
    "lft_transfer",
    "admissible",
    "UnionFind",
]

_KIND_RANK = {"u": 0, "f": 1, "g": 2, "h": 3}
# order of interconnection variables inside a block's input list: x, w, u
_VAR_RANK = {"f": 0, "g": 1, "u": 2, "h": 3}


@dataclass(frozen=True)
class Vertex:
    kind: str   # one of "u", "f", "g", "h"
    index: int  # zero-based

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown vertex kind {self.kind!r}")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index + 1}"

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.index)

    def var_key(self):
        return (_VAR_RANK[self.kind], self.index)

    def __lt__(self, other: "Vertex") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class CompStructure:
    """Typed, variable-labelled directed graph of a realization."""

    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[Vertex, Vertex]]
    manifest: frozenset[Vertex]
    variables: dict = field(default=None, compare=False)
    realization: GeneralizedRealization | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "manifest", frozenset(self.manifest))
        vs = set(self.vertices)
        for a, b in self.edges:
            if a not in vs or b not in vs:
                raise ValueError(f"edge {a}->{b} uses an unknown vertex")
            if a.kind == "h":
                raise ValueError(f"edge leaves output vertex {a}")
            if b.kind == "u":
                raise ValueError(f"edge enters input vertex {b}")
            if a == b and a.kind == "g":
                raise ValueError(f"auxiliary vertex {a} has a self-loop")
        for v in self.vertices:
            if v.kind == "u" and v not in self.manifest:
                raise ValueError(f"input {v} must be manifest")
        if self.variables is None:
            names = {"u": "u", "f": "x", "g": "w", "h": "y"}
            object.__setattr__(
                self, "variables", {v: f"{names[v.kind]}{v.index + 1}" for v in self.vertices}
            )

    def variable(self, v: Vertex) -> str:
        """Name of the variable produced by ``v`` (the label on its out-edges)."""
        return self.variables[v]

    def is_hidden(self, v: Vertex) -> bool:
        return v not in self.manifest

    @property
    def manifest_vars(self) -> frozenset[str]:
        return frozenset(self.variables[v] for v in self.manifest)

    def labelled_edges(self) -> list[tuple[Vertex, Vertex, str]]:
        return sorted(((a, b, self.variables[a]) for a, b in self.edges),
                      key=lambda e: (e[0].sort_key(), e[1].sort_key()))

    def predecessors(self, v: Vertex) -> list[Vertex]:
        return sorted(a for a, b in self.edges if b == v)

    def successors(self, v: Vertex) -> list[Vertex]:
        return sorted(b for a, b in self.edges if a == v)

    def kind(self, k: str) -> list[Vertex]:
        return [v for v in self.vertices if v.kind == k]

    def to_dot(self, partition: Sequence[Sequence[Vertex]] | None = None) -> str:
        from .dot import comp_structure_dot
        return comp_structure_dot(self, partition)


def _nz(x: Fraction) -> bool:
    return x != 0


def comp_structure(g: GeneralizedRealization | StateRealization) -> CompStructure:
    """Computational structure of a linear generalized realization.

    ``i -> j`` is an edge when the coefficient of the variable produced by
    ``i`` in the equation of ``j`` is nonzero.
    """
    if isinstance(g, StateRealization):
        g = g.as_generalized()
    n, l, m, p = g.n, g.l, g.m, g.p
    U = [Vertex("u", i) for i in range(m)]
    F = [Vertex("f", i) for i in range(n)]
    Gv = [Vertex("g", i) for i in range(l)]
    H = [Vertex("h", i) for i in range(p)]
    edges = set()

    def scan(dst, row_blocks):
        for mat, row, srcs in row_blocks:
            for j, src in enumerate(srcs):
                if _nz(mat[row, j]):
                    edges.add((src, dst))

    for i, f in enumerate(F):
        scan(f, [(g.A, i, F), (g.Ahat, i, Gv), (g.B, i, U)])
    for k, w in enumerate(Gv):
        if _nz(g.Atil[k, k]):
            raise ValueError(f"auxiliary equation w{k + 1} reads itself")
        scan(w, [(g.Abar, k, F), (g.Atil, k, Gv), (g.Bbar, k, U)])
    manifest = set(U)
    for r, h in enumerate(H):
        scan(h, [(g.C, r, F), (g.Cbar, r, Gv), (g.D, r, U)])
        nz = [(src, mat[r, j]) for mat, srcs in ((g.C, F), (g.Cbar, Gv), (g.D, U))
              for j, src in enumerate(srcs) if _nz(mat[r, j])]
        if len(nz) == 1 and nz[0][1] == 1:
            manifest.add(nz[0][0])
    variables = {}
    variables.update({v: g.input_labels[v.index] for v in U})
    variables.update({v: g.state_labels[v.index] for v in F})
    variables.update({v: g.aux_labels[v.index] for v in Gv})
    variables.update({v: g.output_labels[v.index] for v in H})
    return CompStructure(tuple(U + F + Gv + H), frozenset(edges), frozenset(manifest),
                         variables, g)


class UnionFind:
    """Disjoint-set forest with path halving and union by size."""

    def __init__(self, items: Iterable = ()):
        self._parent = {}
        self._size = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def find(self, x):
        self.add(x)
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return ra

    def groups(self) -> list[list]:
        out = {}
        for x in self._parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def admissible(c: CompStructure, partition: Sequence[Iterable[Vertex]]) -> bool:
    """True if every edge between different components carries a manifest variable."""
    where = {v: i for i, comp in enumerate(partition) for v in comp}
    return all(where[a] == where[b] or a in c.manifest for a, b in c.edges)


@dataclass(frozen=True)
class Block:
    """One dynamic (or static) subsystem of the LFT: ``outputs = S @ inputs``."""

    component: int
    inputs: tuple[Vertex, ...]
    outputs: tuple[Vertex, ...]
    S: RationalMatrix
    input_names: tuple[str, ...]
    output_names: tuple[str, ...]


@dataclass(frozen=True)
class SubsystemStructure:
    comp: CompStructure
    components: tuple[tuple[Vertex, ...], ...]
    edges: tuple[tuple[int, int, str], ...]

    @property
    def q(self) -> int:
        return len(self.components)

    def component_of(self, v: Vertex) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise KeyError(v)

    def is_passthrough(self, i: int) -> bool:
        """Singleton output reading exactly one manifest variable with gain 1."""
        comp = self.components[i]
        if len(comp) != 1 or comp[0].kind != "h":
            return False
        preds = self.comp.predecessors(comp[0])
        if len(preds) != 1:
            return False
        g = self.comp.realization
        if g is None:
            return True
        return _coefficient(g, comp[0], preds[0]) == 1

    def block_indices(self) -> list[int]:
        """Components that become blocks of ``S``: everything except input
        vertices and pass-through output vertices."""
        return [i for i, comp in enumerate(self.components)
                if not (len(comp) == 1 and comp[0].kind == "u") and not self.is_passthrough(i)]

    def block_inputs(self, i: int) -> tuple[Vertex, ...]:
        comp = set(self.components[i])
        ins = {a for a, b in self.comp.edges if b in comp and a not in comp}
        return tuple(sorted(ins, key=Vertex.var_key))

    def block_outputs(self, i: int) -> tuple[Vertex, ...]:
        comp = set(self.components[i])
        outs = {a for a, b in self.comp.edges if a in comp and b not in comp}
        outs |= {v for v in comp if v.kind == "h"}
        return tuple(sorted(outs, key=Vertex.var_key))

    def transfer(self, i: int) -> RationalMatrix:
        return subsystem_tf(self.comp, self.components[i], self.comp.realization)

    def output_assignment(self) -> list[int]:
        """Subsystem (component index) that produces each output ``y_r``.

        A pass-through output belongs to the component producing the variable
        it reads; an output merged into a block belongs to that block.
        """
        out = []
        for h in self.comp.kind("h"):
            i = self.component_of(h)
            if self.is_passthrough(i):
                i = self.component_of(self.comp.predecessors(h)[0])
            out.append(i)
        return out

    def to_dot(self) -> str:
        from .dot import subsystem_dot
        return subsystem_dot(self)


def subsystem_structure(c: CompStructure) -> SubsystemStructure:
    """Condensation by the maximal admissible partition (union-find over hidden edges)."""
    uf = UnionFind(c.vertices)
    for a, b in c.edges:
        if c.is_hidden(a):
            uf.union(a, b)
    comps = sorted((tuple(sorted(grp)) for grp in uf.groups()), key=lambda t: t[0].sort_key())
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    edges = sorted({(where[a], where[b], c.variable(a)) for a, b in c.edges if where[a] != where[b]})
    return SubsystemStructure(c, tuple(comps), tuple(edges))


def _coefficient(g: GeneralizedRealization, dst: Vertex, src: Vertex) -> Fraction:
    """Coefficient of the variable produced by ``src`` in the equation of ``dst``."""
    table = {
        ("f", "f"): g.A, ("f", "g"): g.Ahat, ("f", "u"): g.B,
        ("g", "f"): g.Abar, ("g", "g"): g.Atil, ("g", "u"): g.Bbar,
        ("h", "f"): g.C, ("h", "g"): g.Cbar, ("h", "u"): g.D,
    }
    return table[(dst.kind, src.kind)][dst.index, src.index]


def subsystem_tf(c: CompStructure, component: Iterable[Vertex],
                 g: GeneralizedRealization | None = None) -> RationalMatrix:
    """Transfer function of one component, from its incoming manifest
    variables (ordered x, w, u by index) to its outgoing manifest variables
    and any outputs it contains."""
    g = g if g is not None else c.realization
    if g is None:
        raise ValueError("computational structure carries no realization")
    if isinstance(g, StateRealization):
        g = g.as_generalized()
    comp = set(component)
    if any(v.kind == "u" for v in comp):
        raise ValueError("input vertices are sources, not subsystems")
    for a, b in c.edges:
        if (a in comp) != (b in comp) and c.is_hidden(a):
            raise InconsistentComponent(
                f"hidden variable {c.variable(a)} crosses the component boundary"
            )
    states = sorted(v for v in comp if v.kind == "f")
    auxs = sorted(v for v in comp if v.kind == "g")
    ins = sorted({a for a, b in c.edges if b in comp and a not in comp}, key=Vertex.var_key)
    outs = sorted({a for a, b in c.edges if a in comp and b not in comp}
                  | {v for v in comp if v.kind == "h"}, key=Vertex.var_key)

    def rows(dsts, srcs):
        return [[_coefficient(g, d, s) for s in srcs] for d in dsts]

    n, l, m, p = len(states), len(auxs), len(ins), len(outs)
    Cr, Cbr, Dr = [], [], []
    for o in outs:
        if o.kind == "h":
            Cr.append([_coefficient(g, o, s) for s in states])
            Cbr.append([_coefficient(g, o, s) for s in auxs])
            Dr.append([_coefficient(g, o, s) for s in ins])
        else:
            Cr.append([int(o == s) for s in states])
            Cbr.append([int(o == s) for s in auxs])
            Dr.append([0] * m)
    sub = GeneralizedRealization.build(
        n, l, m, p,
        A=rows(states, states), Ahat=rows(states, auxs), B=rows(states, ins),
        Abar=rows(auxs, states), Atil=rows(auxs, auxs), Bbar=rows(auxs, ins),
        C=Cr, Cbar=Cbr, D=Dr,
    )
    return transfer_function(sub)


@dataclass(frozen=True)
class LftForm:
    """Lower LFT of a static binary interconnection with block-diagonal ``S``.

    ``pi = L u + K w`` feeds the blocks, ``w = S pi`` collects block outputs
    and ``y = Ly u + Ky w`` reads the outputs.  When every output is a block
    output, ``Ly = 0`` and ``Ky = I``, and ``N = [[0, I], [L, K]]``.
    """

    blocks: tuple[Block, ...]
    L: QMatrix
    K: QMatrix
    Ly: QMatrix
    Ky: QMatrix
    pi: tuple[str, ...]
    signals: tuple[str, ...]
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    @property
    def S(self) -> RationalMatrix:
        return RationalMatrix.block_diag([b.S for b in self.blocks])

    @property
    def Sblocks(self) -> tuple[RationalMatrix, ...]:
        return tuple(b.S for b in self.blocks)

    @property
    def N(self) -> QMatrix:
        return self.Ly.hstack(self.Ky).vstack(self.L.hstack(self.K))

    def with_blocks(self, Ss: Sequence[RationalMatrix]) -> "LftForm":
        """Copy with the block transfer functions replaced (same shapes)."""
        blocks = []
        for b, S in zip(self.blocks, Ss, strict=True):
            if S.shape != b.S.shape:
                raise ValueError(f"block {b.component} expects shape {b.S.shape}")
            blocks.append(Block(b.component, b.inputs, b.outputs, S, b.input_names, b.output_names))
        return LftForm(tuple(blocks), self.L, self.K, self.Ly, self.Ky, self.pi,
                       self.signals, self.inputs, self.outputs)


def to_lft(ss: SubsystemStructure) -> LftForm:
    c = ss.comp
    U = c.kind("u")
    H = c.kind("h")
    blocks = []
    for i in ss.block_indices():
        ins, outs = ss.block_inputs(i), ss.block_outputs(i)
        blocks.append(Block(i, ins, outs, ss.transfer(i),
                            tuple(c.variable(v) for v in ins),
                            tuple(c.variable(v) for v in outs)))
    signals = [v for b in blocks for v in b.outputs]
    sig_index = {v: k for k, v in enumerate(signals)}
    pi = [v for b in blocks for v in b.inputs]
    L = [[0] * len(U) for _ in pi]
    K = [[0] * len(signals) for _ in pi]
    for r, v in enumerate(pi):
        if v.kind == "u":
            L[r][v.index] = 1
        else:
            K[r][sig_index[v]] = 1
    Ly = [[0] * len(U) for _ in H]
    Ky = [[0] * len(signals) for _ in H]
    for r, h in enumerate(H):
        if h in sig_index:
            Ky[r][sig_index[h]] = 1
            continue
        (src,) = c.predecessors(h)
        if src.kind == "u":
            Ly[r][src.index] = 1
        else:
            Ky[r][sig_index[src]] = 1
    return LftForm(
        tuple(blocks),
        QMatrix(L, (len(pi), len(U))), QMatrix(K, (len(pi), len(signals))),
        QMatrix(Ly, (len(H), len(U))), QMatrix(Ky, (len(H), len(signals))),
        tuple(c.variable(v) for v in pi), tuple(c.variable(v) for v in signals),
        tuple(c.variable(v) for v in U), tuple(c.variable(v) for v in H),
    )


def lft_transfer(lft: LftForm) -> RationalMatrix:
    """``G = Ly + Ky (I - S K)^-1 S L``; equals ``(I - SK)^-1 SL`` when ``Ky = I``."""
    S = lft.S
    K = lft.K.to_rational()
    n = S.rows
    try:
        closed = (RationalMatrix.identity(n) - S @ K).inverse()
    except SingularMatrix as exc:
        raise AlgebraicLoop("I - S K is singular") from exc
    return lft.Ly.to_rational() + lft.Ky.to_rational() @ closed @ S @ lft.L.to_rational()

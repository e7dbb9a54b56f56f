"""Dynamical structure functions (signal structure).

Starting from the output normal form ``z = T x'``::

    W(s) = A11 + A12 (sI - A22)^-1 A21
    V(s) = B1  + A12 (sI - A22)^-1 B2
    Q(s) = (sI - diag W)^-1 (W - diag W)
    P(s) = (sI - diag W)^-1 V

so that ``y1 = Q y1 + (P + (I - Q) D1) u`` and ``y2 = C2 y1 + (D2 - C2 D1) u``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .errors import DimensionMismatch, NoManifestOutputs, SingularLoop, SingularMatrix
from .polyrat import RationalFunction, RationalMatrix, S, ZERO_RF
from .qmatrix import QMatrix, sandwich
from .realization import GeneralizedRealization, OutputNormalForm, StateRealization, output_normal_form
from .structure import LftForm

__all__ = [
    "DynamicalStructureFunction",
    "SignalStructureGraph",
    "RelationCheck",
    "dsf",
    "dsf_transfer",
    "signal_structure_graph",
    "split_q",
    "check_relation",
    "assignment_from_lft",
]


@dataclass(frozen=True)
class DynamicalStructureFunction:
    """``(Q, P)`` together with the static blocks ``C2``, ``D1``, ``D2``.

    Rows are in normal-form order: ``output_order[k]`` is the original index
    of the output in row ``k`` (the first ``p1`` rows are ``y1``).
    """

    Q: RationalMatrix
    P: RationalMatrix
    C2: QMatrix
    D1: QMatrix
    D2: QMatrix
    output_order: tuple[int, ...] = None
    input_labels: tuple[str, ...] = None
    output_labels: tuple[str, ...] = None  # indexed by original output number

    def __post_init__(self):
        p1, m = self.P.shape
        if self.Q.shape != (p1, p1):
            raise DimensionMismatch(f"Q is {self.Q.shape}, expected {(p1, p1)}")
        p2 = self.C2.rows
        if self.C2.cols != p1 or self.D1.shape != (p1, m) or self.D2.shape != (p2, m):
            raise DimensionMismatch("C2, D1, D2 do not match Q and P")
        if self.output_order is None:
            object.__setattr__(self, "output_order", tuple(range(p1 + p2)))
        if sorted(self.output_order) != list(range(p1 + p2)):
            raise ValueError("output_order must be a permutation of the outputs")
        if self.input_labels is None:
            object.__setattr__(self, "input_labels", tuple(f"u{i + 1}" for i in range(m)))
        if self.output_labels is None:
            object.__setattr__(self, "output_labels", tuple(f"y{i + 1}" for i in range(p1 + p2)))

    @classmethod
    def from_qp(cls, Q: RationalMatrix, P: RationalMatrix) -> "DynamicalStructureFunction":
        """DSF with ``p1 = p`` and no feedthrough, e.g. one written down by hand."""
        p1, m = P.shape
        return cls(Q, P, QMatrix.zeros(0, p1), QMatrix.zeros(p1, m), QMatrix.zeros(0, m))

    @property
    def p1(self) -> int:
        return self.Q.rows

    @property
    def p(self) -> int:
        return self.Q.rows + self.C2.rows

    @property
    def m(self) -> int:
        return self.P.cols

    @property
    def Qbar(self) -> RationalMatrix:
        return self.Q.vstack(self.C2.to_rational())

    @property
    def Pbar(self) -> RationalMatrix:
        p1 = self.p1
        D1 = self.D1.to_rational()
        top = self.P + (RationalMatrix.identity(p1) - self.Q) @ D1
        bottom = (self.D2 - self.C2 @ self.D1).to_rational()
        return top.vstack(bottom)

    @property
    def Qfull(self) -> RationalMatrix:
        """``[[Q, 0], [C2, 0]]``, square over all outputs (normal-form order)."""
        return self.Qbar.hstack(RationalMatrix.zeros(self.p, self.p - self.p1))

    def _original_rows(self) -> list[int]:
        inv = [0] * self.p
        for k, r in enumerate(self.output_order):
            inv[r] = k
        return inv

    def qbar_original(self) -> RationalMatrix:
        """``Qfull`` with rows and columns in original output order."""
        inv = self._original_rows()
        return self.Qfull.permute(inv, inv)

    def pbar_original(self) -> RationalMatrix:
        inv = self._original_rows()
        return self.Pbar.permute(inv, None)

    @property
    def row_labels(self) -> tuple[str, ...]:
        return tuple(self.output_labels[r] for r in self.output_order)

    def to_dot(self) -> str:
        return signal_structure_graph(self).to_dot()


def dsf(nf: OutputNormalForm | StateRealization | GeneralizedRealization) -> DynamicalStructureFunction:
    if not isinstance(nf, OutputNormalForm):
        nf = output_normal_form(nf)
    p1 = nf.p1
    if p1 < 1:
        raise NoManifestOutputs("p1 must be at least 1")
    W = sandwich(nf.A12, nf.A22, nf.A21, nf.A11)
    V = sandwich(nf.A12, nf.A22, nf.B2, nf.B1)
    q_entries, p_entries = [], []
    for i in range(p1):
        inv = (S - W[i, i]).inverse()
        q_entries.extend(ZERO_RF if j == i else W[i, j] * inv for j in range(p1))
        p_entries.extend(V[i, j] * inv for j in range(V.cols))
    return DynamicalStructureFunction(
        Q=RationalMatrix(p1, p1, q_entries),
        P=RationalMatrix(p1, V.cols, p_entries),
        C2=nf.C2, D1=nf.D1, D2=nf.D2,
        output_order=nf.output_perm,
        input_labels=nf.source.input_labels,
        output_labels=nf.source.output_labels,
    )


def dsf_transfer(d: DynamicalStructureFunction) -> RationalMatrix:
    """``G = (I - [[Q, 0], [C2, 0]])^-1 Pbar``, rows in original output order."""
    try:
        closed = (RationalMatrix.identity(d.p) - d.Qfull).inverse()
    except SingularMatrix as exc:
        raise SingularLoop("I - Q is singular") from exc
    G = closed @ d.Pbar
    return G.permute(d._original_rows(), None)


@dataclass(frozen=True)
class SignalStructureGraph:
    """Vertices are manifest signals; edge ``(src, dst)`` carries a transfer function."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, RationalFunction], ...]

    def edge_set(self) -> set[tuple[str, str]]:
        return {(a, b) for a, b, _ in self.edges}

    def to_dot(self) -> str:
        from .dot import signal_dot
        return signal_dot(self)


def signal_structure_graph(d: DynamicalStructureFunction) -> SignalStructureGraph:
    ys = d.row_labels
    us = d.input_labels
    Pbar = d.Pbar
    edges = []
    for j in range(d.p):
        for i in range(d.m):
            if Pbar[j, i]:
                edges.append((us[i], ys[j], Pbar[j, i]))
    for j in range(d.p1):
        for i in range(d.p1):
            if d.Q[j, i]:
                edges.append((ys[i], ys[j], d.Q[j, i]))
    for j in range(d.C2.rows):
        for i in range(d.p1):
            if d.C2[j, i]:
                edges.append((ys[i], ys[d.p1 + j], RationalFunction(d.C2[j, i])))
    return SignalStructureGraph(tuple(us) + tuple(ys), tuple(edges))


def split_q(d: DynamicalStructureFunction, assignment: Sequence[Hashable]):
    """Split ``Qbar`` (original output order) into intra- and inter-subsystem parts.

    ``assignment[r]`` names the subsystem of output ``r``.
    """
    if len(assignment) != d.p:
        raise DimensionMismatch(f"assignment covers {len(assignment)} of {d.p} outputs")
    Qb = d.qbar_original()
    p = d.p
    intern = [Qb[i, j] if assignment[i] == assignment[j] else ZERO_RF
              for i in range(p) for j in range(p)]
    Qint = RationalMatrix(p, p, intern)
    return Qint, Qb - Qint


def assignment_from_lft(lft: LftForm) -> list[int]:
    """Block number producing each output; requires every output to be one block signal."""
    order = _output_signal_map(lft)
    owner = [b for b, blk in enumerate(lft.blocks) for _ in blk.outputs]
    return [owner[k] for k in order]


def _output_signal_map(lft: LftForm) -> list[int]:
    if not lft.Ly.is_zero():
        raise DimensionMismatch("an output is fed directly by an input; no signal to relate")
    p, nsig = lft.Ky.shape
    if p != nsig:
        raise DimensionMismatch("outputs and interconnection signals do not correspond one to one")
    order = []
    for r in range(p):
        hits = [k for k in range(nsig) if lft.Ky[r, k] != 0]
        if len(hits) != 1 or lft.Ky[r, hits[0]] != 1:
            raise DimensionMismatch(f"output {r + 1} is not a single interconnection signal")
        order.append(hits[0])
    if sorted(order) != list(range(nsig)):
        raise DimensionMismatch("outputs and interconnection signals do not correspond one to one")
    return order


@dataclass(frozen=True)
class RelationCheck:
    holds: bool
    residual: RationalMatrix
    lhs: RationalMatrix = field(repr=False)
    rhs: RationalMatrix = field(repr=False)

    def __bool__(self) -> bool:
        return self.holds


def check_relation(lft: LftForm, d: DynamicalStructureFunction,
                   assignment: Sequence[Hashable] | None = None) -> RelationCheck:
    """Compare ``S [L | K]`` with ``(I - Qint)^-1 [Pbar | Qext]`` exactly.

    Both sides are expressed with rows in output order and columns ordered
    ``[u_1..u_m | y_1..y_p]``; the residual is ``lhs - rhs`` entrywise.
    """
    order = _output_signal_map(lft)
    if assignment is None:
        assignment = assignment_from_lft(lft)
    if lft.L.cols != d.m or len(order) != d.p:
        raise DimensionMismatch("LFT and DSF describe systems of different sizes")
    SLK = lft.S @ lft.L.to_rational().hstack(lft.K.to_rational())
    m = d.m
    lhs = SLK.permute(order, list(range(m)) + [m + k for k in order])
    Qint, Qext = split_q(d, assignment)
    try:
        closed = (RationalMatrix.identity(d.p) - Qint).inverse()
    except SingularMatrix as exc:
        raise SingularLoop("I - Qint is singular") from exc
    rhs = closed @ d.pbar_original().hstack(Qext)
    residual = lhs - rhs
    return RelationCheck(residual.is_zero(), residual, lhs, rhs)


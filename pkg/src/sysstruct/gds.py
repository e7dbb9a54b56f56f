"""Sequential graph dynamical systems over {0, 1}.

At each step the input names one node; only that node updates, to the
mod-2 product of ``(1 + x_j)`` over its closed neighborhood.  Every other
coordinate is held.  The output is one selected coordinate (the last node
by default).

Dependence is decided by exhaustive search: a mechanism depends on an
argument when some fixing of the remaining arguments makes it vary.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import BadNode, ParseError
from .realization import GeneralizedRealization, StateRealization, minimize_intricacy
from .structure import Vertex

__all__ = [
    "Gds",
    "Trajectory",
    "step",
    "simulate",
    "cyclic_inputs",
    "dependent_arguments",
    "dependency_graph",
    "linear_dependency_graph",
    "parse_edge_list",
    "load_edge_list",
]

Rule = Callable[[int, tuple[int, ...], Sequence[int]], int]


def product_rule(i: int, x: tuple[int, ...], closed: Sequence[int]) -> int:
    """``prod (1 + x_j) mod 2`` over the closed neighborhood of node ``i``."""
    out = 1
    for j in closed:
        out = out * (1 + x[j - 1]) % 2
    return out


class Gds:
    """Simple undirected graph on nodes ``1..n`` with a sequential update rule."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 rule: Rule = product_rule, output: int | None = None):
        if n < 1:
            raise ValueError("need at least one node")
        adj = {i: set() for i in range(1, n + 1)}
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at node {a}; the graph must be simple")
            for v in (a, b):
                if v not in adj:
                    raise BadNode(f"edge endpoint {v} is not in 1..{n}")
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self.rule = rule
        self.output = n if output is None else output
        if self.output not in adj:
            raise BadNode(f"output node {self.output} is not in 1..{n}")
        self._adj = {i: tuple(sorted(s)) for i, s in adj.items()}

    @classmethod
    def ring(cls, n: int, **kw) -> "Gds":
        return cls(n, [(i, i % n + 1) for i in range(1, n + 1)], **kw)

    @classmethod
    def path(cls, n: int, **kw) -> "Gds":
        return cls(n, [(i, i + 1) for i in range(1, n)], **kw)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self._adj for b in self._adj[a] if a < b]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._adj[i]

    def closed_neighborhood(self, i: int) -> tuple[int, ...]:
        return tuple(sorted((i,) + self._adj[i]))

    def mechanism(self, i: int, x: Sequence[int], u: int) -> int:
        """Next value of node ``i``: ``f_i(x, u)``."""
        x = tuple(x)
        if u != i:
            return x[i - 1]
        return self.rule(i, x, self.closed_neighborhood(i))

    def observe(self, x: Sequence[int]) -> int:
        return x[self.output - 1]


def step(g: Gds, x: Sequence[int], u: int) -> tuple[int, ...]:
    if not isinstance(u, int) or not 1 <= u <= g.n:
        raise BadNode(f"input {u!r} is not a node of 1..{g.n}")
    x = tuple(x)
    if len(x) != g.n or any(v not in (0, 1) for v in x):
        raise ValueError(f"state must be {g.n} values in {{0, 1}}")
    return x[:u - 1] + (g.mechanism(u, x, u),) + x[u:]


def cyclic_inputs(n: int, T: int) -> list[int]:
    return [t % n + 1 for t in range(T)]


@dataclass(frozen=True)
class Trajectory:
    states: tuple[tuple[int, ...], ...]   # x[0..T]
    inputs: tuple[int, ...]               # u[0..T-1]
    outputs: tuple[int, ...]              # y[0..T]

    def __len__(self) -> int:
        return len(self.states)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n = len(self.states[0])
        w.writerow(["t"] + [f"x{i + 1}" for i in range(n)] + ["u", "y"])
        for t, (x, y) in enumerate(zip(self.states, self.outputs)):
            u = self.inputs[t] if t < len(self.inputs) else ""
            w.writerow([t, *x, u, y])
        return buf.getvalue()


def simulate(g: Gds, x0: Sequence[int], inputs: Sequence[int], T: int | None = None) -> Trajectory:
    T = len(inputs) if T is None else T
    if len(inputs) < T:
        raise ValueError(f"{len(inputs)} inputs for {T} steps")
    states = [tuple(x0)]
    if len(states[0]) != g.n:
        raise ValueError(f"initial state must have {g.n} entries")
    for t in range(T):
        states.append(step(g, states[-1], inputs[t]))
    return Trajectory(tuple(states), tuple(inputs[:T]), tuple(g.observe(x) for x in states))


def dependent_arguments(fn: Callable[..., object], domains: Sequence[Sequence]) -> set[int]:
    """Indices ``k`` such that ``fn`` is not constant in argument ``k`` for
    some fixed choice of all the other arguments."""
    found = set()
    for k, dom in enumerate(domains):
        others = [d for j, d in enumerate(domains) if j != k]
        for rest in itertools.product(*others):
            vals = set()
            for v in dom:
                args = rest[:k] + (v,) + rest[k:]
                vals.add(fn(*args))
                if len(vals) > 1:
                    break
            if len(vals) > 1:
                found.add(k)
                break
    return found


def dependency_graph(g: Gds) -> frozenset[tuple[Vertex, Vertex]]:
    """Directed dependency edges of the GDS as a computational structure.

    Vertices are ``u1`` (the node-selecting input), ``f1..fn`` and ``h1``.
    """
    n = g.n
    domains = [(0, 1)] * n + [tuple(range(1, n + 1))]
    U, H = Vertex("u", 0), Vertex("h", 0)
    F = [Vertex("f", i) for i in range(n)]
    src = F + [U]
    edges = set()
    for i in range(1, n + 1):
        fn = lambda *a, i=i: g.mechanism(i, a[:n], a[n])
        edges.update((src[k], F[i - 1]) for k in dependent_arguments(fn, domains))
    obs = lambda *a: g.observe(a)
    edges.update((F[k], H) for k in dependent_arguments(obs, [(0, 1)] * n))
    return frozenset(edges)


def linear_dependency_graph(r: StateRealization | GeneralizedRealization,
                            grid: Sequence = (-1, 0, 1)) -> frozenset[tuple[Vertex, Vertex]]:
    """Dependency edges of ``dx = A x + B u``, ``y = C x + D u`` found by
    exhaustive search over ``grid`` for every state and input value."""
    if isinstance(r, GeneralizedRealization):
        r = minimize_intricacy(r)
    n, m = r.n, r.m
    grid = tuple(Fraction(v) for v in grid)
    F = [Vertex("f", i) for i in range(n)]
    U = [Vertex("u", i) for i in range(m)]
    H = [Vertex("h", i) for i in range(r.p)]
    src = F + U
    domains = [grid] * (n + m)
    edges = set()

    def affine(row_x, row_u):
        return lambda *a: sum(c * v for c, v in zip(row_x + row_u, a))

    for i in range(n):
        fn = affine(r.A.data[i], r.B.data[i])
        edges.update((src[k], F[i]) for k in dependent_arguments(fn, domains))
    for j in range(r.p):
        fn = affine(r.C.data[j], r.D.data[j])
        edges.update((src[k], H[j]) for k in dependent_arguments(fn, domains))
    return frozenset(edges)


def parse_edge_list(text: str) -> Gds:
    """One ``a b`` pair per line; ``#`` starts a comment.  An optional
    ``nodes N`` line fixes the node count, otherwise it is the largest label."""
    edges, n = [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "nodes" and len(parts) == 2:
                n = int(parts[1])
                continue
            if len(parts) != 2:
                raise ValueError
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: expected 'a b', got {raw!r}") from exc
    if n is None:
        n = max((max(e) for e in edges), default=0)
    return Gds(n, edges)


def load_edge_list(path) -> Gds:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())

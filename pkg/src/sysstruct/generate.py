"""Random small instances for property tests and the acceptance suite."""
from __future__ import annotations

import random
from fractions import Fraction

from .qmatrix import QMatrix
from .realization import GeneralizedRealization, minimize_intricacy
from .structure import CompStructure, Vertex

__all__ = ["random_rational", "random_realization", "random_comp_structure"]


def random_rational(rng: random.Random, density: float = 0.5, span: int = 4) -> Fraction:
    if rng.random() >= density:
        return Fraction(0)
    num = rng.choice([k for k in range(-span, span + 1) if k])
    return Fraction(num, rng.choice([1, 1, 1, 2, 3]))


def _matrix(rng, rows, cols, density):
    return QMatrix([[random_rational(rng, density) for _ in range(cols)] for _ in range(rows)],
                   (rows, cols))


def _nilpotent(rng, l, density):
    """Strictly triangular after a random relabelling, so ``I - Atil`` is unimodular."""
    order = list(range(l))
    rng.shuffle(order)
    rank = {v: k for k, v in enumerate(order)}
    return QMatrix([[random_rational(rng, density) if rank[j] < rank[i] else 0 for j in range(l)]
                    for i in range(l)], (l, l))


def random_realization(rng: random.Random, *, max_n: int = 5, max_l: int = 4, max_m: int = 3,
                       max_p: int = 3, density: float = 0.45,
                       identity_outputs: float = 0.5) -> GeneralizedRealization:
    """Random generalized realization with ``n >= 1`` and a nonzero output map.

    With probability ``identity_outputs`` each output reads a single state or
    auxiliary variable with gain 1, which makes that variable manifest and
    splits the computational structure into several subsystems.
    """
    while True:
        n = rng.randint(1, max_n)
        l = rng.randint(0, max_l)
        m = rng.randint(1, max_m)
        p = rng.randint(1, max_p)
        C = [[Fraction(0)] * n for _ in range(p)]
        Cbar = [[Fraction(0)] * l for _ in range(p)]
        D = _matrix(rng, p, m, density / 2).tolist()
        for r in range(p):
            if rng.random() < identity_outputs:
                k = rng.randrange(n + l)
                if k < n:
                    C[r][k] = Fraction(1)
                else:
                    Cbar[r][k - n] = Fraction(1)
                D[r] = [Fraction(0)] * m
            else:
                C[r] = [random_rational(rng, density) for _ in range(n)]
                Cbar[r] = [random_rational(rng, density) for _ in range(l)]
        g = GeneralizedRealization(
            A=_matrix(rng, n, n, density), Ahat=_matrix(rng, n, l, density),
            Abar=_matrix(rng, l, n, density), Atil=_nilpotent(rng, l, density),
            B=_matrix(rng, n, m, density), Bbar=_matrix(rng, l, m, density),
            C=QMatrix(C, (p, n)), Cbar=QMatrix(Cbar, (p, l)), D=QMatrix(D, (p, m)),
        )
        if not minimize_intricacy(g).C.is_zero():
            return g


def random_comp_structure(rng: random.Random, max_vertices: int = 8,
                          edge_prob: float = 0.3, manifest_prob: float = 0.4) -> CompStructure:
    """Random typed graph obeying the computational-structure rules."""
    total = rng.randint(2, max_vertices)
    counts = {"u": 0, "f": 0, "g": 0, "h": 0}
    counts["f"] = 1
    for _ in range(total - 1):
        counts[rng.choice("ufgh")] += 1
    V = [Vertex(k, i) for k in "ufgh" for i in range(counts[k])]
    edges = set()
    for a in V:
        if a.kind == "h":
            continue
        for b in V:
            if b.kind == "u" or (a == b and a.kind == "g"):
                continue
            if rng.random() < edge_prob:
                edges.add((a, b))
    manifest = {v for v in V if v.kind == "u" or (v.kind != "h" and rng.random() < manifest_prob)}
    return CompStructure(tuple(V), frozenset(edges), frozenset(manifest))

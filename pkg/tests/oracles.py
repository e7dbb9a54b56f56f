"""Independent reference computations used by the tests.

sympy does the symbolic work here; the package itself never imports it.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp

from sysstruct import Polynomial, RationalFunction, RationalMatrix

s = sp.Symbol("s")


def poly_to_sympy(p: Polynomial):
    return sum((sp.Rational(c.numerator, c.denominator) * s**k for k, c in enumerate(p.coeffs)),
               sp.Integer(0))


def to_sympy(f: RationalFunction):
    return poly_to_sympy(f.num) / poly_to_sympy(f.den)


def matrix_to_sympy(M: RationalMatrix) -> sp.Matrix:
    return sp.Matrix(M.rows, M.cols, [to_sympy(M[i, j]) for i in range(M.rows) for j in range(M.cols)])


def q_to_sympy(Q) -> sp.Matrix:
    return sp.Matrix(Q.rows, Q.cols, [sp.Rational(x.numerator, x.denominator)
                                      for r in Q.data for x in r])


def same(f: RationalFunction, expr) -> bool:
    return sp.cancel(to_sympy(f) - expr) == 0


def same_matrix(M: RationalMatrix, E: sp.Matrix) -> bool:
    if (M.rows, M.cols) != E.shape:
        return False
    return all(same(M[i, j], E[i, j]) for i in range(M.rows) for j in range(M.cols))


def transfer_at(A, B, C, D, s0, E=None):
    """``C (s0 E - A)^-1 B + D`` at one rational point, solved by sympy.

    Returns ``None`` when ``s0`` is a pole.
    """
    A, B, C, D = (q_to_sympy(X) if not isinstance(X, sp.Matrix) else X for X in (A, B, C, D))
    n = A.shape[0]
    if n == 0:
        return D
    E = sp.eye(n) if E is None else E
    M = sp.Rational(s0) * E - A
    if M.det() == 0:
        return None
    return C * M.LUsolve(B) + D


def agrees_pointwise(G: RationalMatrix, at, degree: int) -> bool:
    """Compare ``G`` with an oracle evaluated at enough points.

    Two rational functions whose numerator and denominator degrees are at
    most ``degree`` coincide once they agree at ``2 * degree + 1`` points.
    """
    need, s0, hits = 2 * degree + 1, 0, 0
    while hits < need:
        s0 += 1
        ref = at(s0)
        if ref is None or any(G[i, j].den(s0) == 0 for i in range(G.rows) for j in range(G.cols)):
            continue
        if ref.shape != (G.rows, G.cols):
            return False
        for i in range(G.rows):
            for j in range(G.cols):
                v = G[i, j](s0)
                if sp.Rational(v.numerator, v.denominator) != ref[i, j]:
                    return False
        hits += 1
    return True


def transfer_matches(G: RationalMatrix, A, B, C, D) -> bool:
    return agrees_pointwise(G, lambda s0: transfer_at(A, B, C, D, s0), A.rows + 1)


def gauss_solve(M, B):
    """Solve ``M X = B`` over Fractions by Gauss-Jordan; ``None`` if singular."""
    n = len(M)
    aug = [list(map(Fraction, M[i])) + list(map(Fraction, B[i])) for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                k = aug[r][c]
                aug[r] = [a - k * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def descriptor_at(g, s0):
    """``G(s0)`` of a generalized realization, keeping ``w`` as algebraic unknowns:

        [s0 I - A, -Ahat; -Abar, I - Atil] [x; w] = [B; Bbar] u
    """
    n, l, m = g.n, g.l, g.m
    s0 = Fraction(s0)
    M = []
    for i in range(n):
        M.append([(s0 if i == j else 0) - g.A[i, j] for j in range(n)]
                 + [-g.Ahat[i, k] for k in range(l)])
    for k in range(l):
        M.append([-g.Abar[k, j] for j in range(n)]
                 + [(1 if k == q else 0) - g.Atil[k, q] for q in range(l)])
    rhs = [[g.B[i, c] for c in range(m)] for i in range(n)]
    rhs += [[g.Bbar[k, c] for c in range(m)] for k in range(l)]
    X = gauss_solve(M, rhs)
    if X is None:
        return None
    Cfull = [[g.C[r, j] for j in range(n)] + [g.Cbar[r, k] for k in range(l)] for r in range(g.p)]
    return sp.Matrix(g.p, m, [sp.Rational(sum((Cfull[r][k] * X[k][c] for k in range(n + l)),
                                              Fraction(0)) + g.D[r, c])
                              for r in range(g.p) for c in range(m)])


def descriptor_matches(G: RationalMatrix, g) -> bool:
    """``G`` agrees with the unreduced generalized realization ``g``."""
    return agrees_pointwise(G, lambda s0: descriptor_at(g, s0), g.n + 1)


def cofactor_det(m):
    """Laplace expansion along the first row; exponential but obviously correct."""
    n = len(m)
    if n == 0:
        return Polynomial((1,))
    if n == 1:
        return m[0][0]
    total = Polynomial()
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def set_partitions(items):
    """All set partitions of ``items`` (Bell-number many)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def brute_force_maximal_partitions(c):
    """Every admissible partition of maximal cardinality, by enumeration."""
    def ok(part):
        where = {v: i for i, blk in enumerate(part) for v in blk}
        return all(where[a] == where[b] or a in c.manifest for a, b in c.edges)

    best, winners = -1, []
    for part in set_partitions(c.vertices):
        if not ok(part):
            continue
        if len(part) > best:
            best, winners = len(part), [part]
        elif len(part) == best:
            winners.append(part)
    return best, [frozenset(frozenset(b) for b in w) for w in winners]


def all_assignments(domains):
    return itertools.product(*domains)

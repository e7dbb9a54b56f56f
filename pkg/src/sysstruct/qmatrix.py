"""Small dense matrices over the rationals (``Fraction`` entries).

Only what the realization code needs: products, inverse, rank, reduced
row-echelon form and a canonical null-space basis.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, SingularMatrix
from .polyrat import (ZERO_POLY, Polynomial, RationalFunction, RationalMatrix, S, ZERO_RF,
                      _frac, bareiss_adjugate)


class QMatrix:
    """Immutable rational matrix; zero-sized shapes such as ``(3, 0)`` are allowed."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence] = (), shape: tuple[int, int] | None = None):
        rows = tuple(tuple(_frac(x) for x in r) for r in data)
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        r, c = shape
        if len(rows) != r or any(len(x) != c for x in rows):
            raise DimensionMismatch(f"data does not match shape {shape}")
        self.rows, self.cols, self.data = r, c, rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], shape=(n, n))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx) -> Fraction:
        i, j = idx
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.shape, self.data))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return QMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.shape)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return QMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.shape)

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in r] for r in self.data], self.shape)

    def __mul__(self, k) -> "QMatrix":
        k = _frac(k)
        return QMatrix([[a * k for a in r] for r in self.data], self.shape)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.data)) if other.rows else [()] * other.cols
        return QMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.data],
            (self.rows, other.cols),
        )

    @property
    def T(self) -> "QMatrix":
        return QMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                       (self.cols, self.rows))

    def take(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "QMatrix":
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else cols
        return QMatrix([[self.data[i][j] for j in cols] for i in rows], (len(rows), len(cols)))

    def hstack(self, *others: "QMatrix") -> "QMatrix":
        mats = (self,) + others
        if any(m.rows != self.rows for m in mats):
            raise DimensionMismatch("hstack needs equal row counts")
        return QMatrix([sum((m.data[i] for m in mats), ()) for i in range(self.rows)],
                       (self.rows, sum(m.cols for m in mats)))

    def vstack(self, *others: "QMatrix") -> "QMatrix":
        mats = (self,) + others
        if any(m.cols != self.cols for m in mats):
            raise DimensionMismatch("vstack needs equal column counts")
        return QMatrix(sum((m.data for m in mats), ()), (sum(m.rows for m in mats), self.cols))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.data for a in r)

    def rref(self) -> tuple["QMatrix", list[int]]:
        """Reduced row-echelon form and pivot columns (greedy, left to right)."""
        a = [list(r) for r in self.data]
        pivots: list[int] = []
        row = 0
        for col in range(self.cols):
            p = next((i for i in range(row, self.rows) if a[i][col] != 0), None)
            if p is None:
                continue
            a[row], a[p] = a[p], a[row]
            inv = 1 / a[row][col]
            a[row] = [x * inv for x in a[row]]
            for i in range(self.rows):
                if i != row and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == self.rows:
                break
        return QMatrix(a, self.shape), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def independent_rows(self) -> list[int]:
        """Lexicographically smallest maximal set of independent rows."""
        return self.T.rref()[1]

    def nullspace(self) -> "QMatrix":
        """Canonical null-space basis (columns), one per free variable of the RREF."""
        r, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = QMatrix.zeros(self.cols, len(free))
        cols = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for k, p in enumerate(pivots):
                v[p] = -r.data[k][f]
            cols.append(v)
        if cols:
            basis = QMatrix([[c[i] for c in cols] for i in range(self.cols)], (self.cols, len(free)))
        return basis

    def inverse(self) -> "QMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch(f"cannot invert a {self.rows}x{self.cols} matrix")
        n = self.rows
        r, pivots = self.hstack(QMatrix.identity(n)).rref()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise SingularMatrix("matrix is singular")
        return r.take(cols=range(n, 2 * n))

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, [RationalFunction(a) for r in self.data for a in r])

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.data)

    def __repr__(self) -> str:
        return f"QMatrix({[[str(a) for a in r] for r in self.data]}, shape={self.shape})"


def resolvent(a: QMatrix) -> RationalMatrix:
    """``(sI - A)^-1`` as a rational-function matrix."""
    n = a.rows
    si_a = RationalMatrix(
        n, n,
        [(S if i == j else ZERO_RF) - RationalFunction(a.data[i][j]) for i in range(n) for j in range(n)],
    )
    return si_a.inverse()


def _si_minus(a: QMatrix) -> list[list[Polynomial]]:
    n = a.rows
    return [[Polynomial((-a.data[i][j], 1)) if i == j else Polynomial((-a.data[i][j],))
             for j in range(n)] for i in range(n)]


def sandwich(c: QMatrix, a: QMatrix, b: QMatrix, d: QMatrix | None = None) -> RationalMatrix:
    """``C (sI - A)^-1 B + D`` with one normalisation per entry.

    The products are formed on the polynomial adjugate, so no intermediate
    rational-function arithmetic is needed.
    """
    if c.cols != a.rows or b.rows != a.rows:
        raise DimensionMismatch("C, A, B are not conformable")
    p, m = c.rows, b.cols
    if a.rows == 0:
        return (d if d is not None else QMatrix.zeros(p, m)).to_rational()
    det, adj = bareiss_adjugate(_si_minus(a))
    n = a.rows
    # (C adj) then (C adj) B; constants times polynomials only
    cr = []
    for i in range(p):
        row = []
        for k in range(n):
            acc = ZERO_POLY
            for j in range(n):
                cij = c.data[i][j]
                if cij:
                    acc = acc + adj[j][k] * cij
            row.append(acc)
        cr.append(row)
    out = []
    for i in range(p):
        for k in range(m):
            acc = ZERO_POLY
            for j in range(n):
                bjk = b.data[j][k]
                if bjk:
                    acc = acc + cr[i][j] * bjk
            if d is not None and d.data[i][k]:
                acc = acc + det * d.data[i][k]
            out.append(RationalFunction(acc, det))
    return RationalMatrix(p, m, out)


def as_qmatrix(x, shape: tuple[int, int] | None = None) -> QMatrix:
    if isinstance(x, QMatrix):
        if shape is not None and x.shape != shape:
            raise DimensionMismatch(f"expected shape {shape}, got {x.shape}")
        return x
    if x is None:
        if shape is None:
            raise ValueError("shape required for an omitted matrix")
        return QMatrix.zeros(*shape)
    data = [list(r) for r in x]
    if shape is not None and not data:
        return QMatrix.zeros(*shape)
    m = QMatrix(data)
    if shape is not None and m.shape != shape:
        if m.rows == shape[0] and m.cols == 0 and shape[1] == 0:
            return QMatrix.zeros(*shape)
        raise DimensionMismatch(f"expected shape {shape}, got {m.shape}")
    return m


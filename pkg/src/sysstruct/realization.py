"""Generalized state realizations with auxiliary variables.

A generalized realization is::

    dx/dt = A x + Ahat w + B u
        w = Abar x + Atil w + Bbar u
        y = C x + Cbar w + D u

with ``n`` states, ``l`` auxiliary variables (the *intricacy*), ``m`` inputs
and ``p`` outputs.  Eliminating ``w`` gives the minimal-intricacy realization
``(Ao, Bo, Co, Do)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import IndexNotZero, NoManifestOutputs, SingularMatrix, DimensionMismatch
from .polyrat import RationalMatrix
from .qmatrix import QMatrix, as_qmatrix, sandwich

__all__ = [
    "GeneralizedRealization",
    "StateRealization",
    "OutputNormalForm",
    "minimize_intricacy",
    "transfer_function",
    "is_controllable",
    "is_observable",
    "output_normal_form",
]


def _labels(prefix: str, count: int, given: Sequence[str] | None) -> tuple[str, ...]:
    if given is None:
        return tuple(f"{prefix}{i + 1}" for i in range(count))
    given = tuple(given)
    if len(given) != count:
        raise DimensionMismatch(f"{len(given)} labels for {count} {prefix}-variables")
    return given


@dataclass(frozen=True)
class GeneralizedRealization:
    A: QMatrix
    Ahat: QMatrix
    Abar: QMatrix
    Atil: QMatrix
    B: QMatrix
    Bbar: QMatrix
    C: QMatrix
    Cbar: QMatrix
    D: QMatrix
    input_labels: tuple[str, ...] = field(default=None)
    state_labels: tuple[str, ...] = field(default=None)
    aux_labels: tuple[str, ...] = field(default=None)
    output_labels: tuple[str, ...] = field(default=None)

    def __post_init__(self):
        n, l = self.A.rows, self.Atil.rows
        m, p = self.B.cols, self.C.rows
        expected = {
            "A": (n, n), "Ahat": (n, l), "Abar": (l, n), "Atil": (l, l),
            "B": (n, m), "Bbar": (l, m), "C": (p, n), "Cbar": (p, l), "D": (p, m),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise DimensionMismatch(
                    f"{name} has shape {getattr(self, name).shape}, expected {shape}"
                )
        object.__setattr__(self, "input_labels", _labels("u", m, self.input_labels))
        object.__setattr__(self, "state_labels", _labels("x", n, self.state_labels))
        object.__setattr__(self, "aux_labels", _labels("w", l, self.aux_labels))
        object.__setattr__(self, "output_labels", _labels("y", p, self.output_labels))

    @classmethod
    def build(cls, n: int, l: int, m: int, p: int, *, A=None, Ahat=None, Abar=None,
              Atil=None, B=None, Bbar=None, C=None, Cbar=None, D=None, labels=None):
        """Construct from nested lists; omitted matrices are zero."""
        labels = labels or {}
        return cls(
            A=as_qmatrix(A, (n, n)), Ahat=as_qmatrix(Ahat, (n, l)),
            Abar=as_qmatrix(Abar, (l, n)), Atil=as_qmatrix(Atil, (l, l)),
            B=as_qmatrix(B, (n, m)), Bbar=as_qmatrix(Bbar, (l, m)),
            C=as_qmatrix(C, (p, n)), Cbar=as_qmatrix(Cbar, (p, l)),
            D=as_qmatrix(D, (p, m)),
            input_labels=labels.get("u"), state_labels=labels.get("x"),
            aux_labels=labels.get("w"), output_labels=labels.get("y"),
        )

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def l(self) -> int:
        return self.Atil.rows

    @property
    def intricacy(self) -> int:
        return self.Atil.rows

    @property
    def m(self) -> int:
        return self.B.cols

    @property
    def p(self) -> int:
        return self.C.rows


@dataclass(frozen=True)
class StateRealization:
    A: QMatrix
    B: QMatrix
    C: QMatrix
    D: QMatrix
    input_labels: tuple[str, ...] = field(default=None)
    state_labels: tuple[str, ...] = field(default=None)
    output_labels: tuple[str, ...] = field(default=None)

    def __post_init__(self):
        n, m, p = self.A.rows, self.B.cols, self.C.rows
        for name, shape in {"A": (n, n), "B": (n, m), "C": (p, n), "D": (p, m)}.items():
            if getattr(self, name).shape != shape:
                raise DimensionMismatch(
                    f"{name} has shape {getattr(self, name).shape}, expected {shape}"
                )
        object.__setattr__(self, "input_labels", _labels("u", m, self.input_labels))
        object.__setattr__(self, "state_labels", _labels("x", n, self.state_labels))
        object.__setattr__(self, "output_labels", _labels("y", p, self.output_labels))

    @classmethod
    def build(cls, A, B, C, D=None, *, n=None, m=None, p=None, labels=None):
        A = as_qmatrix(A, None if n is None else (n, n))
        n = A.rows
        B = as_qmatrix(B, None if m is None else (n, m))
        C = as_qmatrix(C, None if p is None else (p, n))
        D = as_qmatrix(D, (C.rows, B.cols))
        labels = labels or {}
        return cls(A, B, C, D, labels.get("u"), labels.get("x"), labels.get("y"))

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.B.cols

    @property
    def p(self) -> int:
        return self.C.rows

    def as_generalized(self) -> GeneralizedRealization:
        n, m, p = self.n, self.m, self.p
        return GeneralizedRealization(
            self.A, QMatrix.zeros(n, 0), QMatrix.zeros(0, n), QMatrix.zeros(0, 0),
            self.B, QMatrix.zeros(0, m), self.C, QMatrix.zeros(p, 0), self.D,
            self.input_labels, self.state_labels, (), self.output_labels,
        )

    def transfer_function(self) -> RationalMatrix:
        return transfer_function(self)


def minimize_intricacy(g: GeneralizedRealization | StateRealization) -> StateRealization:
    """Eliminate the auxiliary variables: ``w = (I - Atil)^-1 (Abar x + Bbar u)``."""
    if isinstance(g, StateRealization):
        return g
    try:
        X = (QMatrix.identity(g.l) - g.Atil).inverse()
    except SingularMatrix as exc:
        raise IndexNotZero("I - Atil is singular; differentiation index is not zero") from exc
    XAbar = X @ g.Abar
    XBbar = X @ g.Bbar
    return StateRealization(
        g.A + g.Ahat @ XAbar,
        g.B + g.Ahat @ XBbar,
        g.C + g.Cbar @ XAbar,
        g.D + g.Cbar @ XBbar,
        g.input_labels, g.state_labels, g.output_labels,
    )


def transfer_function(r: StateRealization | GeneralizedRealization) -> RationalMatrix:
    """``G(s) = Co (sI - Ao)^-1 Bo + Do``."""
    if isinstance(r, GeneralizedRealization):
        r = minimize_intricacy(r)
    return sandwich(r.C, r.A, r.B, r.D)


def _krylov(a: QMatrix, b: QMatrix) -> QMatrix:
    blocks = [b]
    for _ in range(a.rows - 1):
        blocks.append(a @ blocks[-1])
    return blocks[0].hstack(*blocks[1:])


def is_controllable(r: StateRealization) -> bool:
    if r.n == 0:
        return True
    return _krylov(r.A, r.B).rank() == r.n


def is_observable(r: StateRealization) -> bool:
    if r.n == 0:
        return True
    return _krylov(r.A.T, r.C.T).rank() == r.n


@dataclass(frozen=True)
class OutputNormalForm:
    """Realization in coordinates ``z = T x'`` with output map ``[[I, 0], [C2, 0]]``.

    ``x' = x[state_perm]`` and the outputs are taken in ``output_perm`` order,
    so the first ``p1`` outputs are independent rows of ``Co``.
    """

    p1: int
    output_perm: tuple[int, ...]
    state_perm: tuple[int, ...]
    T: QMatrix
    A: QMatrix
    B: QMatrix
    C: QMatrix
    D: QMatrix
    source: StateRealization

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def p(self) -> int:
        return self.C.rows

    @property
    def A11(self) -> QMatrix:
        return self.A.take(range(self.p1), range(self.p1))

    @property
    def A12(self) -> QMatrix:
        return self.A.take(range(self.p1), range(self.p1, self.n))

    @property
    def A21(self) -> QMatrix:
        return self.A.take(range(self.p1, self.n), range(self.p1))

    @property
    def A22(self) -> QMatrix:
        return self.A.take(range(self.p1, self.n), range(self.p1, self.n))

    @property
    def B1(self) -> QMatrix:
        return self.B.take(rows=range(self.p1))

    @property
    def B2(self) -> QMatrix:
        return self.B.take(rows=range(self.p1, self.n))

    @property
    def C2(self) -> QMatrix:
        return self.C.take(range(self.p1, self.p), range(self.p1))

    @property
    def D1(self) -> QMatrix:
        return self.D.take(rows=range(self.p1))

    @property
    def D2(self) -> QMatrix:
        return self.D.take(rows=range(self.p1, self.p))

    @property
    def output_labels(self) -> tuple[str, ...]:
        return tuple(self.source.output_labels[i] for i in self.output_perm)

    @property
    def realization(self) -> StateRealization:
        return StateRealization(self.A, self.B, self.C, self.D,
                                self.source.input_labels, None, self.output_labels)


def output_normal_form(r: StateRealization | GeneralizedRealization) -> OutputNormalForm:
    """Reorder outputs and states so ``C11`` is invertible, then apply
    ``T = [[C11, C12], [0, N2^-1]]``.

    Output rows are chosen greedily left to right; the states of ``C11`` are
    the pivot columns of the selected rows.  ``N`` is the free-variable
    null-space basis of the reordered ``Co``, for which ``N2 = I``.
    """
    if isinstance(r, GeneralizedRealization):
        r = minimize_intricacy(r)
    Co = r.C
    rows = Co.independent_rows()
    p1 = len(rows)
    if p1 == 0:
        raise NoManifestOutputs("Co is zero: no output carries state information")
    out_perm = tuple(rows) + tuple(i for i in range(r.p) if i not in rows)
    _, cols = Co.take(rows=rows).rref()
    st_perm = tuple(cols) + tuple(j for j in range(r.n) if j not in cols)

    Cp = Co.take(out_perm, st_perm)
    N = Cp.nullspace()
    N2 = N.take(rows=range(p1, r.n))
    top = Cp.take(rows=range(p1))
    bottom = QMatrix.zeros(r.n - p1, p1).hstack(N2.inverse())
    T = top.vstack(bottom)
    Tinv = T.inverse()

    Ap = r.A.take(st_perm, st_perm)
    Bp = r.B.take(rows=st_perm)
    Dp = r.D.take(rows=out_perm)
    C = Cp @ Tinv
    return OutputNormalForm(
        p1=p1, output_perm=out_perm, state_perm=st_perm, T=T,
        A=T @ Ap @ Tinv, B=T @ Bp, C=C, D=Dp, source=r,
    )

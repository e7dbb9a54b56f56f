"""Exact univariate polynomials, rational functions and rational-function
matrices in the Laplace variable ``s``.

All coefficients are :class:`fractions.Fraction`, so every operation is exact.
Values are immutable and every function here is pure.

Canonical encodings:

* the zero polynomial has an empty coefficient tuple and degree ``-inf``;
* a rational function is stored with coprime numerator and denominator and a
  monic denominator, so equal rationals compare (and hash) equal;
* zero is ``0/1``.

The textual syntax accepted by :func:`parse_rational` and produced by
``str()`` uses integers, ``s``, ``+``, ``-``, ``*``, ``/``, ``^`` and
parentheses, e.g. ``"(s^2+18*s+76)/(s^3+21*s^2+130*s+234)"``.
"""
from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError, SingularMatrix, ZeroDenominator

NEG_INF = -math.inf

__all__ = [
    "NEG_INF",
    "Polynomial",
    "RationalFunction",
    "RationalMatrix",
    "Properness",
    "poly_gcd",
    "rf_normalize",
    "rm_add",
    "rm_sub",
    "rm_mul",
    "rm_scale",
    "rm_inverse",
    "properness",
    "parse_rational",
    "S",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    return Fraction(x)


class Polynomial:
    """Polynomial with exact rational coefficients, stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = cls.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self):
        """Degree; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def _key(self):
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __lt__(self, other: "Polynomial") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Polynomial") -> bool:
        return self._key() <= other._key()

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.const(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            k = _frac(other)
            if k == 0:
                return ZERO_POLY
            return Polynomial._raw(tuple(c * k for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = ONE_POLY, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(r) - 1 < db:
            return ZERO_POLY, self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lead
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= c * b
        return Polynomial(q), Polynomial(r[:db])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        lead = self.coeffs[-1]
        return Polynomial._raw(tuple(c / lead for c in self.coeffs))

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def n_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            if k == 0:
                body = str(a)
            else:
                mono = "s" if k == 1 else f"s^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


ZERO_POLY = Polynomial()
ONE_POLY = Polynomial((1,))
S_POLY = Polynomial((0, 1))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``gcd(0, 0) == 0``."""
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return ONE_POLY
    # monic remainders keep the Fraction coefficients from growing
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO_POLY
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class Properness(enum.Enum):
    IMPROPER = "improper"
    PROPER = "proper"
    STRICTLY_PROPER = "strictly proper"


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.const(x)


class RationalFunction:
    """Ratio of two polynomials kept in coprime, monic-denominator form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        if not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
        lead = den.lc
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        f = cls.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, str):
            return parse_rational(x)
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.lc

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            if isinstance(other, (int, Fraction, Polynomial)):
                other = RationalFunction(other)
            else:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO_RF
        # cross-cancel first so the canonicalising gcd works on smaller inputs
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num.exact_div(g1), other.den.exact_div(g1)
        n2, d1 = other.num.exact_div(g2), self.den.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lead = den.lc
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDenominator("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num**k, self.den**k)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDenominator(f"{self} has a pole at {x}")
        return self.num(x) / d

    @property
    def properness(self) -> Properness:
        return properness(self)

    def relative_degree(self):
        return self.den.degree - self.num.degree

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if self.num.n_terms() > 1 or self.num.lc.denominator != 1:
            n = f"({n})"
        d = str(self.den)
        if not (self.den.n_terms() == 1 and self.den.lc == 1):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


ZERO_RF = RationalFunction()
ONE_RF = RationalFunction(1)
S = RationalFunction(S_POLY)


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Canonical coprime, monic-denominator form of ``num/den``."""
    return RationalFunction(num, den)


def properness(f: RationalFunction) -> Properness:
    if f.num.is_zero() or f.num.degree < f.den.degree:
        return Properness.STRICTLY_PROPER
    if f.num.degree == f.den.degree:
        return Properness.PROPER
    return Properness.IMPROPER


# --------------------------------------------------------------------------
# textual syntax

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(s)|([-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    text = text.replace("−", "-").replace("**", "^")
    tokens: list[str] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        # implicit multiplication: "2s", "2(s+1)", ")(", "s(" ...
        if tokens and (tok == "s" or tok == "(" or tok[0].isdigit()):
            prev = tokens[-1]
            if prev == ")" or prev == "s" or prev[0].isdigit():
                tokens.append("*")
        tokens.append(tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            base = base ** (sign * int(tok))
        return base

    def atom(self):
        tok = self.take()
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok == "s":
            return S
        if tok[0].isdigit():
            return RationalFunction(Fraction(tok))
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_rational(text: str) -> RationalFunction:
    """Parse the textual rational-function syntax into canonical form."""
    try:
        return _Parser(str(text)).parse()
    except ZeroDenominator as exc:
        raise ParseError(f"division by zero in {text!r}") from exc


# --------------------------------------------------------------------------
# matrices


class RationalMatrix:
    """Dense, immutable matrix of :class:`RationalFunction`, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(RationalFunction.coerce(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {rows}x{cols} matrix"
            )
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols: int | None = None):
        data = [list(r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(data), cols, [e for r in data for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls._raw(rows, cols, (ZERO_RF,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._raw(
            n, n, tuple(ONE_RF if i == j else ZERO_RF for i in range(n) for j in range(n))
        )

    @classmethod
    def diag(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        vals = [RationalFunction.coerce(v) for v in values]
        return cls._raw(
            n, n, tuple(vals[i] if i == j else ZERO_RF for i in range(n) for j in range(n))
        )

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "RationalMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, entries
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx) -> RationalFunction:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[RationalFunction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_constant(self) -> bool:
        return all(e.is_constant() for e in self.entries)

    def nonzero_pattern(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(not e.is_zero() for e in self.row(i)) for i in range(self.rows))

    def _check_same(self, other: "RationalMatrix", op: str):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot {op} {self.shape} and {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other, "add")
        return RationalMatrix._raw(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other, "subtract")
        return RationalMatrix._raw(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for col in ocols:
                acc = ZERO_RF
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
        return RationalMatrix._raw(self.rows, other.cols, tuple(out))

    def __mul__(self, k) -> "RationalMatrix":
        if isinstance(k, RationalMatrix):
            raise TypeError("use @ for matrix products")
        k = RationalFunction.coerce(k)
        return RationalMatrix._raw(self.rows, self.cols, tuple(a * k for a in self.entries))

    __rmul__ = __mul__

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix._raw(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix._raw(
            len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols)
        )

    def hstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        mats = (self,) + others
        if any(m.rows != self.rows for m in mats):
            raise DimensionMismatch("hstack needs equal row counts")
        entries = []
        for i in range(self.rows):
            for m in mats:
                entries.extend(m.row(i))
        return RationalMatrix._raw(self.rows, sum(m.cols for m in mats), tuple(entries))

    def vstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        mats = (self,) + others
        if any(m.cols != self.cols for m in mats):
            raise DimensionMismatch("vstack needs equal column counts")
        return RationalMatrix._raw(
            sum(m.rows for m in mats), self.cols, sum((m.entries for m in mats), ())
        )

    @staticmethod
    def block_diag(blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[ZERO_RF] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return RationalMatrix._raw(rows, cols, tuple(e for r in out for e in r))

    def diagonal(self) -> tuple:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def permute(self, row_order: Sequence[int] | None = None,
                col_order: Sequence[int] | None = None) -> "RationalMatrix":
        rows = range(self.rows) if row_order is None else row_order
        cols = range(self.cols) if col_order is None else col_order
        return self.submatrix(list(rows), list(cols))

    # -- exact elimination -------------------------------------------------

    def _row_scaled_polys(self):
        """Multiply each row by the lcm of its denominators.

        Returns the resulting polynomial matrix and the per-row multipliers.
        """
        scales, polys = [], []
        for i in range(self.rows):
            r = self.row(i)
            m = ONE_POLY
            for e in r:
                if not e.den.is_one():
                    m = poly_lcm(m, e.den)
            scales.append(m)
            polys.append([e.num * m.exact_div(e.den) for e in r])
        return polys, scales

    def det(self) -> RationalFunction:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        polys, scales = self._row_scaled_polys()
        d = bareiss_det(polys)
        denom = ONE_POLY
        for m in scales:
            denom = denom * m
        return RationalFunction(d, denom)

    def inverse(self) -> "RationalMatrix":
        return rm_inverse(self)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}: {[[str(e) for e in r] for r in self.tolist()]})"


def _pick_pivot(a, k: int, n: int) -> int | None:
    best = None
    for i in range(k, n):
        p = a[i][k]
        if p and (best is None or p.degree < a[best][k].degree):
            best = i
    return best


def bareiss_det(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square polynomial matrix, fraction-free."""
    n = len(m)
    if n == 0:
        return ONE_POLY
    a = [list(r) for r in m]
    sign = 1
    prev = ONE_POLY
    for k in range(n - 1):
        p = _pick_pivot(a, k, n)
        if p is None:
            return ZERO_POLY
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - aik * a[k][j]).exact_div(prev)
            a[i][k] = ZERO_POLY
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def bareiss_adjugate(m: Sequence[Sequence[Polynomial]]):
    """Fraction-free Gauss-Jordan on ``[M | I]``.

    Returns ``(d, R)`` with ``M @ R == d * I``; ``d`` is ``+-det(M)``.
    Raises :class:`SingularMatrix` if ``det(M) == 0``.
    """
    n = len(m)
    a = [list(r) + [ONE_POLY if i == j else ZERO_POLY for j in range(n)] for i, r in enumerate(m)]
    width = 2 * n
    prev = ONE_POLY
    for k in range(n):
        p = _pick_pivot(a, k, n)
        if p is None:
            raise SingularMatrix("matrix is singular")
        if p != k:
            a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        rowk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            for j in range(width):
                if j == k:
                    continue
                ri[j] = (piv * ri[j] - aik * rowk[j]).exact_div(prev)
            ri[k] = ZERO_POLY
        prev = piv
    d = prev if n else ONE_POLY
    return d, [r[n:] for r in a]


def rm_inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse over the rational-function field.

    Rows are cleared of denominators, the polynomial matrix is inverted by
    fraction-free Gauss-Jordan, and the row scaling is undone on the columns.
    """
    if m.rows != m.cols:
        raise DimensionMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return m
    polys, scales = m._row_scaled_polys()
    d, r = bareiss_adjugate(polys)
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(RationalFunction(r[i][j] * scales[j], d))
    return RationalMatrix._raw(n, n, tuple(entries))


def rm_add(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a + b


def rm_sub(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a - b


def rm_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a @ b


def rm_scale(a: RationalMatrix, k) -> RationalMatrix:
    return a * k

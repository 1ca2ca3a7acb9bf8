"""
Exact rational arithmetic: scalars, dense matrices with nullspaces, and
polynomials with Sturm-sequence real-root counting.

Scalars are :class:`fractions.Fraction` values, which are always stored in
lowest terms with a positive denominator. Nothing in this module touches
floating point.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic")
    return Fraction(x)


def rat_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` (one of + - * / or their unicode forms) exactly.

    Raises ZeroDivisionError on division by zero.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    a, b = rat(a), rat(b)
    if fn is operator.truediv and b == 0:
        raise ZeroDivisionError(f"{a} / 0")
    return fn(a, b)


def format_rational(x) -> str:
    """Serialize as ``"p/q"``, or ``"n"`` when the denominator is 1."""
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows}x{self.cols}={self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(rat(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows([self.col(j) for j in range(self.cols)])

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def scale(self, c) -> "RationalMatrix":
        c = rat(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = [other.col(j) for j in range(other.cols)]
            return RationalMatrix.from_rows(
                [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)]
            )
        v = [rat(x) for x in other]
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def shift(self, lam) -> "RationalMatrix":
        """Return ``self - lam * I`` (square matrices only)."""
        if self.rows != self.cols:
            raise ValueError("shift needs a square matrix")
        lam = rat(lam)
        return RationalMatrix.from_rows(
            [[a - lam if i == j else a for j, a in enumerate(self.row(i))] for i in range(self.rows)]
        )

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "RationalMatrix":
        cols = list(cols)
        return RationalMatrix.from_rows([[self[i, j] for j in cols] for i in rows])

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.entries)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivoting takes the first column with a nonzero entry at or below the
    current row, and the first such row. Pivot entries are scaled to 1.
    """
    m = [[rat(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(M: RationalMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(rref(M.to_rows())[1])


def nullspace(M: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace of ``M``.

    One vector per free column ``c`` of the RREF, with a 1 in position ``c``
    and zeros at every other free column. The result is deterministic.
    """
    if M.cols == 0:
        return []
    if M.rows == 0:
        return [tuple(Fraction(int(i == c)) for i in range(M.cols)) for c in range(M.cols)]
    m, pivots = rref(M.to_rows())
    pivot_set = set(pivots)
    basis = []
    for fc in range(M.cols):
        if fc in pivot_set:
            continue
        v = [Fraction(0)] * M.cols
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][fc]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class IntPolynomial:
    """Univariate polynomial with exact rational coefficients.

    ``coefficients[k]`` is the coefficient of ``x**k``; trailing zeros are
    stripped so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [rat(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def from_descending(cls, coefficients: Iterable) -> "IntPolynomial":
        return cls(list(coefficients)[::-1])

    def __repr__(self):
        return f"IntPolynomial({[format_rational(c) for c in self.coefficients]})"

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            c = rat(other)
            return IntPolynomial(c * a for a in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coefficients) if k)

    def __divmod__(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dq = len(rem) - len(other.coefficients)
        if dq < 0:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coefficients):
                    rem[k + i] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem[: other.degree])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "IntPolynomial":
        if self.is_zero():
            return self
        return self * (1 / self.leading)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')``: same distinct roots, each simple."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree <= 0:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(seq: list[IntPolynomial], x) -> list[int]:
    if x is None or x == "-inf":
        return [_sign(q.leading) * (-1) ** q.degree for q in seq]
    if x == "+inf":
        return [_sign(q.leading) for q in seq]
    return [_sign(q(x)) for q in seq]


def sturm_real_root_count(p: IntPolynomial, interval=None) -> int:
    """Number of distinct real roots of ``p``.

    ``interval`` is ``None`` (all of the real line) or a pair ``(a, b)``
    where either end may be ``None`` for an infinite end. Finite ends count
    roots in the half-open interval ``(a, b]``.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    q = square_free_part(p)
    if q.degree <= 0:
        return 0
    seq = sturm_sequence(q)
    lo, hi = (None, None) if interval is None else interval
    lo = "-inf" if lo is None else rat(lo)
    hi = "+inf" if hi is None else rat(hi)
    if lo != "-inf" and hi != "+inf" and lo >= hi:
        return 0
    return _variations(_signs_at(seq, lo)) - _variations(_signs_at(seq, hi))


@dataclass(frozen=True)
class RootReport:
    """Real-rootedness summary of a polynomial."""

    degree: int
    squarefree_degree: int
    real_roots: int

    @property
    def real_rooted(self) -> bool:
        return self.real_roots == self.squarefree_degree


def real_root_report(p: IntPolynomial) -> RootReport:
    return RootReport(p.degree, square_free_part(p).degree, sturm_real_root_count(p))

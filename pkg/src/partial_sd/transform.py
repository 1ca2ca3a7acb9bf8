"""
f- and h-vector transformation matrices of the l-th partial barycentric
subdivision, plus the structural checks they satisfy.

For dimension parameter ``d`` (complexes of dimension ``d - 1``) both
matrices are ``(d+1) x (d+1)``:

* ``f_matrix(d, l)[i, j] = R(j, i, l)``
* ``h_matrix(d, l)[i, j] = A(d+1, i, d+1-j, l)``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .complex import SimplicialComplex, f_to_h, f_vector
from .exact import IntPolynomial, RationalMatrix, RootReport, real_root_report
from .partitions import R_count, R_formula
from .permstat import count_A


@dataclass(frozen=True)
class TransformMatrix:
    d: int
    l: int
    kind: str
    matrix: RationalMatrix

    def to_rows(self) -> list[list[int]]:
        return [[int(x) for x in self.matrix.row(i)] for i in range(self.matrix.rows)]

    def __getitem__(self, ij):
        return int(self.matrix[ij])

    @property
    def size(self) -> int:
        return self.d + 1


def _check(d: int, l: int) -> None:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not 1 <= l <= d:
        raise ValueError(f"level l={l} out of range 1..{d}")


@lru_cache(maxsize=None)
def f_matrix(d: int, l: int, check_formula: bool = False) -> TransformMatrix:
    _check(d, l)
    rows = []
    for i in range(d + 1):
        row = []
        for j in range(d + 1):
            v = R_count(j, i, l)
            if check_formula and v != R_formula(j, i, l):
                raise ArithmeticError(f"R({j},{i},{l}): count {v} != formula {R_formula(j, i, l)}")
            row.append(v)
        rows.append(row)
    return TransformMatrix(d, l, "F", RationalMatrix.from_rows(rows))


@lru_cache(maxsize=None)
def h_matrix(d: int, l: int) -> TransformMatrix:
    _check(d, l)
    rows = [[count_A(d + 1, i, d + 1 - j, l) for j in range(d + 1)] for i in range(d + 1)]
    return TransformMatrix(d, l, "H", RationalMatrix.from_rows(rows))


def transform_matrix(d: int, l: int, kind: str) -> TransformMatrix:
    kind = kind.upper()
    if kind == "F":
        return f_matrix(d, l)
    if kind == "H":
        return h_matrix(d, l)
    raise ValueError(f"kind must be 'f' or 'h', got {kind!r}")


def _apply(M: TransformMatrix, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != M.size:
        raise ValueError(f"vector of length {len(v)} does not match d={M.d}")
    return tuple(int(x) for x in M.matrix @ v)


def apply_h_transform(h: Sequence[int], d: int, l: int) -> tuple[int, ...]:
    return _apply(h_matrix(d, l), h)


def apply_f_transform(f: Sequence[int], d: int, l: int) -> tuple[int, ...]:
    return _apply(f_matrix(d, l), f)


def iterate_h(h: Sequence[int], d: int, l: int, n: int) -> list[tuple[int, ...]]:
    """``[h, H h, H^2 h, ..., H^n h]``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    seq = [tuple(h)]
    for _ in range(n):
        seq.append(apply_h_transform(seq[-1], d, l))
    return seq


def change_of_basis(d: int) -> RationalMatrix:
    """Matrix ``C`` with ``h = C f`` for complexes with dimension parameter ``d``."""
    return RationalMatrix.from_rows(
        [[(-1) ** (j - i) * comb(d - i, j - i) if i <= j else 0 for i in range(d + 1)] for j in range(d + 1)]
    )


def change_of_basis_inverse(d: int) -> RationalMatrix:
    return RationalMatrix.from_rows(
        [[comb(d - j, i - j) if j <= i else 0 for j in range(d + 1)] for i in range(d + 1)]
    )


def top_level_closed_form(d: int) -> RationalMatrix:
    """Closed form of ``h_matrix(d, d-1)``: unit first/last rows, 2 on the inner diagonal, 1 elsewhere."""

    def entry(i, j):
        if (i == 0 and j != 0) or (i == d and j != d):
            return 0
        if i == j and 1 <= i <= d - 1:
            return 2
        return 1

    return RationalMatrix.from_rows([[entry(i, j) for j in range(d + 1)] for i in range(d + 1)])


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------


@dataclass
class SumReport:
    d: int
    l: int
    column_sums: list[int]
    expected_column: int
    total: int
    expected_total: int

    @property
    def column_ok(self) -> list[bool]:
        return [s == self.expected_column for s in self.column_sums]

    @property
    def passed(self) -> bool:
        return all(self.column_ok) and self.total == self.expected_total


def check_sums(M: TransformMatrix) -> SumReport:
    """Columns of an h-matrix sum to ``d!/l!`` and all entries to ``(d+1)!/l!``."""
    if M.kind != "H":
        raise ValueError("column sums are a property of the h-matrix")
    cols = [int(sum(M.matrix.col(j))) for j in range(M.size)]
    return SumReport(
        M.d,
        M.l,
        cols,
        factorial(M.d) // factorial(M.l),
        sum(cols),
        factorial(M.d + 1) // factorial(M.l),
    )


def symmetry_violations(M: TransformMatrix) -> list[tuple[int, int]]:
    """Entries with ``M[i, j] != M[d-i, d-j]``."""
    d = M.d
    return [
        (i, j)
        for i in range(d + 1)
        for j in range(d + 1)
        if M.matrix[i, j] != M.matrix[d - i, d - j]
    ]


@dataclass
class MonotonicityReport:
    d: int
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    strict: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    strict_rows: dict[int, list[int]] = field(default_factory=dict)

    @property
    def monotone(self) -> bool:
        return not self.violations

    @property
    def inner_rows(self) -> list[int]:
        return list(range(2, self.d - 1))

    @property
    def inner_rows_strict(self) -> bool:
        """Whether rows ``2..d-2`` are strict in every column for every level pair."""
        return all(set(self.inner_rows) <= set(rows) for rows in self.strict_rows.values())


def check_monotonicity(d: int) -> MonotonicityReport:
    """Compare ``h_matrix(d, l+1) <= h_matrix(d, l)`` entrywise for ``1 <= l < d``.

    ``strict[l]`` lists entries where the inequality is strict and
    ``strict_rows[l]`` the rows that are strict in every column.
    """
    if d < 2:
        raise ValueError("monotonicity needs d >= 2")
    rep = MonotonicityReport(d)
    for l in range(1, d):
        lo, hi = h_matrix(d, l + 1).matrix, h_matrix(d, l).matrix
        strict = []
        for i in range(d + 1):
            for j in range(d + 1):
                if lo[i, j] > hi[i, j]:
                    rep.violations.append((l, i, j))
                elif lo[i, j] < hi[i, j]:
                    strict.append((i, j))
        rep.strict[l] = strict
        rep.strict_rows[l] = [
            i for i in range(d + 1) if all((i, j) in strict for j in range(d + 1))
        ]
    return rep


def similarity_holds(d: int, l: int) -> bool:
    """``H = C F C^{-1}`` exactly."""
    C, Cinv = change_of_basis(d), change_of_basis_inverse(d)
    return C @ f_matrix(d, l).matrix @ Cinv == h_matrix(d, l).matrix


def pipelines_agree(f: Sequence[int], d: int, l: int) -> bool:
    """``f_to_h(F f) == H f_to_h(f)`` for an arbitrary integer vector."""
    return f_to_h(apply_f_transform(f, d, l)) == apply_h_transform(f_to_h(f), d, l)


# ---------------------------------------------------------------------------
# f-polynomials
# ---------------------------------------------------------------------------


def f_polynomial(f: Sequence[int]) -> IntPolynomial:
    """``sum_i f_{i-1} t^{d-i}``."""
    return IntPolynomial.from_descending(f)


def f_polynomial_real_roots(K_or_f) -> RootReport:
    f = f_vector(K_or_f) if isinstance(K_or_f, SimplicialComplex) else tuple(K_or_f)
    return real_root_report(f_polynomial(f))


@dataclass(frozen=True)
class RootWitness:
    d: int
    l: int
    f: tuple[int, ...]
    report: RootReport


def search_non_real_rooted(max_d: int = 6, min_level: int = 2) -> list[RootWitness]:
    """Simplices ``2^[d]``, ``d <= max_d``, whose ``sd^l`` f-polynomial has non-real roots."""
    out = []
    for d in range(1, max_d + 1):
        simplex_f = [comb(d, j) for j in range(d + 1)]
        for l in range(min_level, d):
            f = apply_f_transform(simplex_f, d, l)
            rep = f_polynomial_real_roots(f)
            if not rep.real_rooted:
                out.append(RootWitness(d, l, f, rep))
    return out

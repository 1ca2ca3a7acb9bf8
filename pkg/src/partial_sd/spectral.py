"""
Exact eigen-decomposition of the transformation matrices.

The spectrum is known in advance: eigenvalue 1 with multiplicity ``l + 1``
and the simple eigenvalues ``k!/l!`` for ``l < k <= d``. Each eigenspace is
computed as an exact nullspace, and the decomposition refuses to return
unless the dimensions add up to ``d + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exact import RationalMatrix, nullspace, rref
from .transform import f_matrix, h_matrix, transform_matrix

Vector = tuple[Fraction, ...]


class DiagonalizationError(RuntimeError):
    """Eigenspace dimensions do not certify the expected spectrum."""


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: Fraction
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def known_spectrum(d: int, l: int) -> list[tuple[Fraction, int]]:
    """``[(1, l+1), ((l+1)!/l!, 1), ..., (d!/l!, 1)]``."""
    out = [(Fraction(1), l + 1)]
    out += [(Fraction(factorial(k), factorial(l)), 1) for k in range(l + 1, d + 1)]
    return out


def residual(M: RationalMatrix, lam, v: Sequence) -> Vector:
    Mv = M @ v
    return tuple(a - lam * b for a, b in zip(Mv, v))


def is_eigenvector(M: RationalMatrix, lam, v: Sequence) -> bool:
    return any(v) and not any(residual(M, lam, v))


def eigen_decompose(d: int, l: int, kind: str = "h") -> list[EigenPair]:
    M = transform_matrix(d, l, kind).matrix
    pairs = []
    for lam, mult in known_spectrum(d, l):
        basis = tuple(nullspace(M.shift(lam)))
        if len(basis) != mult:
            raise DiagonalizationError(
                f"{kind.upper()}(d={d}, l={l}): eigenvalue {lam} has geometric "
                f"multiplicity {len(basis)}, expected {mult}"
            )
        pairs.append(EigenPair(lam, basis))
    if sum(p.dim for p in pairs) != d + 1:
        raise DiagonalizationError(f"eigenspaces of dimension {sum(p.dim for p in pairs)} != {d + 1}")
    return pairs


def _normalize(v: Sequence[Fraction], at: int) -> Vector:
    c = v[at]
    if c == 0:
        raise ZeroDivisionError(f"coordinate {at} is zero")
    return tuple(x / c for x in v)


def perron_vector(d: int, l: int) -> Vector:
    """Eigenvector of ``h_matrix(d, l)`` for ``d!/l!`` scaled so coordinate 1 equals 1."""
    if not 1 <= l <= d - 1:
        raise ValueError(f"need 1 <= l <= d-1, got d={d}, l={l}")
    lam = Fraction(factorial(d), factorial(l))
    (v,) = nullspace(h_matrix(d, l).matrix.shift(lam))
    return _normalize(v, 1)


@dataclass(frozen=True)
class StructuredBasis:
    """Eigenbasis of an h-matrix in boundary-anchored form.

    ``anchored`` holds the two eigenvalue-1 vectors ``(1, *, ..., *, 0)`` and
    ``(0, *, ..., *, 1)``; ``inner_ones`` the remaining eigenvalue-1 vectors
    and ``higher`` one vector per eigenvalue ``k!/l!``, all vanishing at both
    ends. The top vector is scaled so coordinate 1 equals 1, the others so
    their first nonzero coordinate equals 1.
    """

    d: int
    l: int
    anchored: tuple[Vector, Vector]
    inner_ones: tuple[Vector, ...]
    higher: tuple[tuple[Fraction, Vector], ...]

    def pairs(self) -> list[tuple[Fraction, Vector]]:
        one = Fraction(1)
        return [(one, v) for v in self.anchored + self.inner_ones] + list(self.higher)

    @property
    def top(self) -> Vector:
        return self.higher[-1][1]

    def certificates(self) -> dict[str, bool]:
        M = h_matrix(self.d, self.l).matrix
        top_lam = Fraction(factorial(self.d), factorial(self.l))
        w1, w2 = self.anchored
        rest = [v for v in self.inner_ones] + [v for _, v in self.higher]
        non_top = [v for lam, v in self.pairs() if lam != top_lam]
        return {
            "eigen": all(is_eigenvector(M, lam, v) for lam, v in self.pairs()),
            "count": len(self.pairs()) == self.d + 1,
            "independent": len(rref([v for _, v in self.pairs()])[1]) == self.d + 1,
            "anchored_first": w1[0] == 1 and w1[-1] == 0,
            "anchored_last": w2[0] == 0 and w2[-1] == 1,
            "zero_ends": all(v[0] == 0 and v[-1] == 0 for v in rest),
            "zero_sum_non_top": all(sum(v) == 0 for v in non_top),
            "top_positive": all(x > 0 for x in self.top[1:-1]),
        }


def _first_nonzero_one(v: Sequence[Fraction]) -> Vector:
    c = next(x for x in v if x != 0)
    return tuple(x / c for x in v)


def structured_eigenbasis(d: int, l: int) -> StructuredBasis:
    """Row-reduce the eigenvalue-1 space with coordinates 0 and d as leading pivots."""
    if not 1 <= l <= d - 1:
        raise ValueError(f"need 1 <= l <= d-1, got d={d}, l={l}")
    pairs = eigen_decompose(d, l, "h")
    ones = pairs[0].basis
    # permute coordinates so 0 and d come first, reduce, and permute back
    order = [0, d] + list(range(1, d))
    back = {c: n for n, c in enumerate(order)}
    reduced, pivots = rref([[v[c] for c in order] for v in ones])
    if pivots[:2] != [0, 1]:
        raise DiagonalizationError("eigenvalue-1 space is not anchored at both boundary coordinates")
    vecs = [tuple(row[back[c]] for c in range(d + 1)) for row in reduced]
    anchored = (vecs[0], vecs[1])
    inner = tuple(_first_nonzero_one(v) for v in vecs[2:])
    higher = []
    for p in pairs[1:]:
        (v,) = p.basis
        higher.append((p.eigenvalue, _first_nonzero_one(v)))
    lam, v = higher[-1]
    higher[-1] = (lam, _normalize(v, 1))
    return StructuredBasis(d, l, anchored, inner, tuple(higher))


def inner_matrix(M: RationalMatrix) -> RationalMatrix:
    """Drop the first and last rows and columns."""
    idx = range(1, M.rows - 1)
    return M.submatrix(idx, idx)


def inner_unit_eigenspace_dim(d: int, l: int) -> int:
    return len(nullspace(inner_matrix(h_matrix(d, l).matrix).shift(1)))


def padded_eigenvectors_hold(d: int, l: int) -> bool:
    """Eigenvectors of ``f_matrix(d, l)`` padded by a trailing 0 are eigenvectors of ``f_matrix(d+1, l)``."""
    big = f_matrix(d + 1, l).matrix
    for p in eigen_decompose(d, l, "f"):
        for v in p.basis:
            if not is_eigenvector(big, p.eigenvalue, tuple(v) + (Fraction(0),)):
                return False
    return True

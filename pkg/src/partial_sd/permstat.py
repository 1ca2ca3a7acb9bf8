"""
Permutations with a decreasing prefix and their statistics.

A permutation is a tuple in one-line notation, ``sigma[i-1] = σ(i)``.
``S_d^l`` is the set of permutations of ``[d]`` whose first ``l`` values
decrease.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


def is_permutation(sigma: Sequence[int]) -> bool:
    return sorted(sigma) == list(range(1, len(sigma) + 1))


def in_Sdl(sigma: Sequence[int], l: int) -> bool:
    return is_permutation(sigma) and all(sigma[i] > sigma[i + 1] for i in range(min(l, len(sigma)) - 1))


def _check_level(d: int, l: int) -> None:
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    if not 1 <= l <= max(d, 1):
        raise ValueError(f"level l={l} out of range 1..{d}")


def _check_member(sigma: Sequence[int], l: int) -> None:
    if not is_permutation(sigma):
        raise ValueError(f"{tuple(sigma)} is not a permutation")
    _check_level(len(sigma), l)
    if not in_Sdl(sigma, l):
        raise ValueError(f"{tuple(sigma)} does not have a decreasing prefix of length {l}")


def gen_Sdl(d: int, l: int) -> list[Permutation]:
    """All of ``S_d^l`` in lexicographic order; there are ``d!/l!`` of them."""
    _check_level(d, l)
    if d == 0:
        return [()]
    full = range(1, d + 1)
    out = []
    for head in combinations(full, l):
        rest = [v for v in full if v not in head]
        prefix = tuple(reversed(head))
        for tail in permutations(rest):
            out.append(prefix + tail)
    out.sort()
    return out


def descent_set(sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def l_descent_set(sigma: Sequence[int], l: int) -> frozenset[int]:
    """Positions ``i <= l`` with ``σ(i) > σ(l+1)``, plus ordinary descents after ``l``.

    For ``l = len(sigma)`` there is no ``σ(l+1)`` and the set is empty.
    """
    _check_member(sigma, l)
    d = len(sigma)
    if l >= d:
        return frozenset()
    pivot = sigma[l]
    head = {i for i in range(1, l + 1) if sigma[i - 1] > pivot}
    return frozenset(head | {i for i in range(l + 1, d) if sigma[i - 1] > sigma[i]})


def l_des(sigma: Sequence[int], l: int) -> int:
    return len(l_descent_set(sigma, l))


def _des_fast(sigma: Permutation, l: int) -> int:
    # assumes membership has been checked
    d = len(sigma)
    if l >= d:
        return 0
    pivot = sigma[l]
    n = sum(1 for i in range(l) if sigma[i] > pivot)
    return n + sum(1 for i in range(l, d - 1) if sigma[i] > sigma[i + 1])


@lru_cache(maxsize=None)
def a_table(d: int, l: int) -> tuple[tuple[int, ...], ...]:
    """``table[i][j-1] = A(d, i, j, l)`` for ``0 <= i < d`` and ``1 <= j <= d``."""
    _check_level(d, l)
    table = [[0] * d for _ in range(max(d, 1))]
    for sigma in gen_Sdl(d, l):
        table[_des_fast(sigma, l)][sigma[-1] - 1] += 1
    return tuple(tuple(r) for r in table)


def count_A(d: int, i: int, j: int, l: int) -> int:
    """Number of ``σ ∈ S_d^l`` with ``i`` l-descents and last value ``σ(d) = j``."""
    if i < 0 or i >= d or not 1 <= j <= d:
        return 0
    return a_table(d, l)[i][j - 1]


def excedance(sigma: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(sigma, 1) if v > i)


def derangements(d: int) -> list[Permutation]:
    return [s for s in permutations(range(1, d + 1)) if all(v != i for i, v in enumerate(s, 1))]


def chi(sigma: Sequence[int], l: int) -> Permutation:
    """Injective map ``S_d^l -> S_d`` used to define l-excedances.

    With ``p`` the number of prefix values above ``σ(l+1)``: when ``p`` is 0
    or ``l`` the prefix is reversed; otherwise both runs ``σ(1..p)`` and
    ``σ(p+1..l)`` are reversed in place.
    """
    _check_member(sigma, l)
    sigma = tuple(sigma)
    d = len(sigma)
    if l >= d:
        return tuple(reversed(sigma))
    pivot = sigma[l]
    if pivot > sigma[0] or sigma[l - 1] > pivot:
        return tuple(reversed(sigma[:l])) + sigma[l:]
    p = sum(1 for v in sigma[:l] if v > pivot)
    return tuple(reversed(sigma[:p])) + tuple(reversed(sigma[p:l])) + sigma[l:]


def l_excedance(sigma: Sequence[int], l: int) -> int:
    return excedance(chi(sigma, l))


STATISTICS = ("descent", "excedance")


def distribution_table(d: int, l: int, statistic: str) -> tuple[int, ...]:
    """Histogram of the l-descent or l-excedance statistic over ``S_d^l``."""
    statistic = statistic.removeprefix("l-")
    if statistic not in STATISTICS:
        raise ValueError(f"statistic must be one of {STATISTICS}, got {statistic!r}")
    if statistic == "descent":
        counts = Counter(_des_fast(s, l) for s in gen_Sdl(d, l))
    else:
        counts = Counter(excedance(chi(s, l)) for s in gen_Sdl(d, l))
    return tuple(counts[k] for k in range(max(d, 1)))


def distribution_columns(d: int, levels: Iterable[int], statistic: str) -> dict[int, tuple[int, ...]]:
    return {l: distribution_table(d, l, statistic) for l in levels}


def coset_size(d: int, l: int) -> int:
    return factorial(d) // factorial(l)

"""
Restricted ordered set partitions and the restricted Stirling numbers R(j, i, l).

A restricted partition of ``[j]`` is ``|B_0|B_1|...|B_r|`` where the head
``B_0`` may be empty and has at most ``l`` elements, the blocks ``B_1..B_r``
are nonempty, ``#B_0 + r = i``, and ``#(B_0 ∪ B_1) >= l + 1`` whenever
``r >= 1``. These index the faces of a partially subdivided simplex that
lie over a fixed ``(j-1)``-face.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class RestrictedPartition:
    head: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        """``#B_0 + r``."""
        return len(self.head) + len(self.blocks)

    def __str__(self):
        parts = ["{" + ",".join(map(str, self.head)) + "}" if self.head else "∅"]
        parts += ["{" + ",".join(map(str, B)) + "}" for B in self.blocks]
        return "|" + "|".join(parts) + "|"


def _ordered_partitions(elems: tuple[int, ...], nblocks: int, first_min: int = 1) -> Iterator[tuple]:
    """Ordered partitions of ``elems`` into ``nblocks`` nonempty blocks, first block of size >= first_min."""
    n = len(elems)
    if nblocks == 0:
        if n == 0:
            yield ()
        return
    lo = max(first_min, 1)
    # every later block needs at least one element
    for k in range(lo, n - nblocks + 2):
        for first in combinations(elems, k):
            rest = tuple(e for e in elems if e not in first)
            for tail in _ordered_partitions(rest, nblocks - 1):
                yield (first,) + tail


def enumerate_restricted(j: int, i: int, l: int) -> list[RestrictedPartition]:
    """All restricted partitions of ``[j]`` with ``#B_0 + r = i``, sorted by (head, blocks)."""
    if j < 0 or i < 0 or l < 0:
        raise ValueError("j, i must be >= 0 and l >= 0")
    ground = tuple(range(1, j + 1))
    out = []
    for p in range(0, min(l, i, j) + 1):
        r = i - p
        for head in combinations(ground, p):
            rest = tuple(v for v in ground if v not in head)
            if r == 0:
                if not rest:
                    out.append(RestrictedPartition(head, ()))
                continue
            for blocks in _ordered_partitions(rest, r, first_min=l + 1 - p):
                out.append(RestrictedPartition(head, blocks))
    out.sort()
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _surjections(n: int, k: int) -> int:
    return factorial(k) * stirling2(n, k)


@lru_cache(maxsize=None)
def R_count(j: int, i: int, l: int) -> int:
    """Restricted Stirling number ``R(j, i, l)``.

    Counts the same objects as :func:`enumerate_restricted` by choosing the
    head (``p`` elements), then the first block (``b >= l + 1 - p``), then an
    ordered partition of the remainder into ``i - p - 1`` blocks.
    """
    if j < 0 or i < 0 or l < 0:
        raise ValueError("j, i must be >= 0 and l >= 0")
    total = 0
    for p in range(0, min(l, i, j) + 1):
        r = i - p
        if r == 0:
            total += int(p == j)
            continue
        n = j - p
        for b in range(max(l + 1 - p, 1), n + 1):
            total += comb(j, p) * comb(n, b) * _surjections(n - b, r - 1)
    return total


def _multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for k in parts:
        out //= factorial(k)
    return out


@lru_cache(maxsize=None)
def R_formula(j: int, k: int, l: int) -> int:
    """``R(j, k, l)`` as a sum over descent-position sets.

    Sums over ``s_1 < ... < s_{k-1} <= j - 1`` with ``s_k = j``. Let ``p``
    be the length of the initial run ``1, 2, ..., p`` of positions inside
    ``[l]`` and ``t`` the first position ``>= l + 1``. Each set contributes
    ``C(t - l + p, p)`` arrangements of the first segment times the
    multinomial ``(j; t, s_{q+1} - t, ..., j - s_{k-1})`` distributing the
    values over the segments. Positions inside ``[l]`` after the initial run
    still count towards ``k``.
    """
    if l < 1:
        raise ValueError("the position-set formula needs l >= 1")
    if k == 0:
        return int(j == 0)
    if j <= l:
        # every element sits in the head
        return int(k == j)
    total = 0
    for inner in combinations(range(1, j), k - 1):
        s = inner + (j,)
        p = 0
        while p < len(s) and p < l and s[p] == p + 1:
            p += 1
        q = next(n for n, x in enumerate(s) if x >= l + 1)
        t = s[q]
        gaps = [t] + [s[n] - s[n - 1] for n in range(q + 1, k)]
        total += comb(t - l + p, p) * _multinomial(gaps)
    return total

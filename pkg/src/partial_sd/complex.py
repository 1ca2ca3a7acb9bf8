"""
Finite abstract simplicial complexes stored by their facets.

Vertices are positive integers in ``[1, ground_size]``. Faces are sorted
tuples. The void-but-nonempty complex ``{∅}`` is the complex whose only
facet is the empty tuple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    ground_size: int
    facets: tuple[Face, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], ground_size: int | None = None):
        """Build a complex, dropping facets contained in other facets."""
        sets = []
        for F in facets:
            F = frozenset(F)
            for v in F:
                if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                    raise ValueError(f"vertices must be positive integers, got {v!r}")
            sets.append(F)
        if not sets:
            raise ValueError("a complex needs at least one facet (use [[]] for {∅})")
        top = max(max(F, default=0) for F in sets)
        if ground_size is None:
            ground_size = top
        elif ground_size < top:
            raise ValueError(f"ground_size {ground_size} < largest vertex {top}")
        # largest first, so a set only needs comparing with kept ones
        sets = sorted(set(sets), key=lambda F: (-len(F), sorted(F)))
        kept: list[frozenset] = []
        for F in sets:
            if not any(F <= G for G in kept):
                kept.append(F)
        return cls(ground_size, tuple(sorted(tuple(sorted(F)) for F in kept)))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """The full simplex ``2^[n]``."""
        return cls.from_facets([range(1, n + 1)], ground_size=n)

    @classmethod
    def boundary_of_simplex(cls, n: int) -> "SimplicialComplex":
        return cls.from_facets(combinations(range(1, n + 1), n - 1), ground_size=n)

    # -- basic queries -----------------------------------------------------

    @property
    def dim(self) -> int:
        return max(len(F) for F in self.facets) - 1

    @property
    def d(self) -> int:
        """Size of the largest facet (dimension plus one)."""
        return self.dim + 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for F in self.facets for v in F}))

    @cached_property
    def face_set(self) -> frozenset[Face]:
        out = set()
        for F in self.facets:
            for k in range(len(F) + 1):
                out.update(combinations(F, k))
        return frozenset(out)

    def is_face(self, S: Iterable[int]) -> bool:
        return tuple(sorted(S)) in self.face_set

    def __contains__(self, S) -> bool:
        return self.is_face(S)

    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) == 1

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"ground": self.ground_size, "facets": [list(F) for F in self.facets]}

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict) or "facets" not in data:
            raise ValueError('complex JSON must be an object with a "facets" array')
        facets = data["facets"]
        if not isinstance(facets, list) or not all(isinstance(F, list) for F in facets):
            raise ValueError('"facets" must be an array of arrays')
        return cls.from_facets(facets, data.get("ground"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_dict(json.loads(text))


def all_faces(K: SimplicialComplex) -> list[list[Face]]:
    """Faces grouped by size: entry ``k`` lists the faces with ``k`` vertices."""
    out: list[list[Face]] = [[] for _ in range(K.d + 1)]
    for F in K.face_set:
        out[len(F)].append(F)
    for group in out:
        group.sort()
    return out


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_{d-1})``."""
    counts = [0] * (K.d + 1)
    for F in K.face_set:
        counts[len(F)] += 1
    return tuple(counts)


def f_to_h(f: Sequence[int]) -> tuple[int, ...]:
    """h_j = sum_{i<=j} (-1)^(j-i) C(d-i, j-i) f_{i-1}, with d = len(f) - 1."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def h_to_f(h: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    """f_{i-1} = sum_{j<=i} C(d-j, i-j) h_j."""
    if d is None:
        d = len(h) - 1
    if len(h) != d + 1:
        raise ValueError(f"h-vector of length {len(h)} does not match d={d}")
    return tuple(
        sum(comb(d - j, i - j) * h[j] for j in range(i + 1)) for i in range(d + 1)
    )


def h_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return f_to_h(f_vector(K))


def restriction(K: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    """Induced subcomplex on the vertex set ``W``."""
    W = frozenset(W)
    if any(v < 1 or v > K.ground_size for v in W):
        raise ValueError("restriction set must lie in the ground set")
    facets = [tuple(v for v in F if v in W) for F in K.facets]
    return SimplicialComplex.from_facets(facets, ground_size=K.ground_size)


def minimal_nonfaces(K: SimplicialComplex, size_cap: int | None = None) -> list[Face]:
    """Inclusion-minimal non-faces, sorted by (size, lex).

    A minimal non-face ``N`` with largest element ``v`` is ``F ∪ {v}`` for the
    face ``F = N - {v}``; when ``|F| >= 2`` every vertex of ``F`` must be a
    neighbour of ``v``, which prunes the candidates.
    """
    if size_cap is None:
        size_cap = K.ground_size
    faces = K.face_set
    ground = range(1, K.ground_size + 1)
    out: list[Face] = []
    if size_cap >= 1:
        out.extend((v,) for v in ground if (v,) not in faces)
    present = [v for v in ground if (v,) in faces]
    nbrs: dict[int, set[int]] = {v: set() for v in present}
    for F in faces:
        if len(F) == 2:
            a, b = F
            nbrs[a].add(b)
            nbrs[b].add(a)
    if size_cap >= 2:
        for i, a in enumerate(present):
            for b in present[i + 1:]:
                if b not in nbrs[a]:
                    out.append((a, b))
    for F in faces:
        k = len(F)
        if k < 2 or k + 1 > size_cap:
            continue
        cands = set.intersection(*(nbrs[u] for u in F))
        for v in cands:
            if v <= F[-1]:
                continue
            N = F + (v,)
            if N in faces:
                continue
            if all(N[:i] + N[i + 1:] in faces for i in range(k)):
                out.append(N)
    out.sort(key=lambda N: (len(N), N))
    return out
